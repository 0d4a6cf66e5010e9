#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "clusterdeep/laurent.hpp"
#include "clusterdeep/point.hpp"
#include "clusterdeep/quiver.hpp"
#include "clusterdeep/seed.hpp"

namespace clusterdeep {

// An identity y * denominator = numerator, where y is the cluster variable
// obtained by mutating the seed reached by `target_word` at `vertex`.
// Numerator and denominator are polynomials in the chart generators of the
// seed reached by `base_word`: its extended cluster z_1..z_{n+m} (variables
// 0..n+m-1) followed by its one-step mutations z'_1..z'_n (variables n+m..).
// With an empty base word these are the model generators x_i, x'_i.
struct Witness {
  MutationWord base_word;
  MutationWord target_word;
  int vertex = 0;
  LaurentPoly numerator;
  LaurentPoly denominator;

  friend bool operator==(const Witness&, const Witness&) = default;
  std::string to_string(int n, int m) const;
};

// Names "x1".."x{n+m}", "x1'".."xn'" for chart generators.
std::vector<std::string> chart_generator_names(int n, int m);

// Symbolic seeds reached from the initial seed of one quiver, memoised by
// word. Thread-safe.
class SymbolicCache {
 public:
  explicit SymbolicCache(IceQuiver q) : q_(std::move(q)) {}
  const IceQuiver& quiver() const { return q_; }

  Seed seed(const MutationWord& w);
  // Laurent expressions of the chart generators of the seed at w.
  std::vector<LaurentPoly> chart_generators(const MutationWord& w);
  // The variable obtained by mutating the seed at w in direction k.
  LaurentPoly one_step(const MutationWord& w, int k);

 private:
  IceQuiver q_;
  std::mutex mu_;
  std::map<MutationWord, Seed> seeds_;
};

struct WitnessCheck {
  bool ok = false;
  std::string message;
  LaurentPoly difference;  // y*D - N in initial variables when ok is false
};

WitnessCheck verify_witness(const IceQuiver& q, const Witness& w);
WitnessCheck verify_witness(SymbolicCache& cache, const Witness& w);

// Identity for the one-step variable at j after mutating at k, expressed in
// the chart of the seed before that mutation. Requires |b_kj| = 1:
//   y * z_k * C = U * z'_j + V * Z
// where P_k = U + z_j V and P_j = z_k W + Z are the exchange binomials and
// C = gcd(U, Z). Returns nullopt when |b_kj| != 1.
std::optional<Witness> two_step_witness(const IceQuiver& current, const MutationWord& base_word, int k, int j);

// Searches for an identity y * D = N with D a monomial of degree <= 2 in the
// model generators (restricted to generators nonzero at `pt` when given) and
// N of degree <= degree_bound, by exact linear algebra on Laurent terms.
// Falls back to the two-step identity when the ansatz has no solution.
// Returned witnesses are verified.
std::optional<Witness> solve_witness(const IceQuiver& q, const MutationWord& word, int k, int degree_bound = 2,
                                     const ModelPoint* pt = nullptr);

}  // namespace clusterdeep
