#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "clusterdeep/point.hpp"
#include "clusterdeep/quiver.hpp"
#include "clusterdeep/seed.hpp"
#include "clusterdeep/smith.hpp"
#include "clusterdeep/witness.hpp"

namespace clusterdeep {

struct RelationViolation {
  int vertex;
  Rational lhs;  // p_i * p'_i
  Rational rhs;  // M1(p) + M2(p)
};

// Checks p_i p'_i = M1_i(p) + M2_i(p) for every mutable i. Throws NotAcyclic
// if the mutable part has an oriented cycle and InvalidPoint on a shape
// mismatch or a zero frozen value.
std::vector<RelationViolation> validate_point(const IceQuiver& q, const ModelPoint& pt);

// Throws InvalidPoint listing every violated relation.
void require_valid(const IceQuiver& q, const ModelPoint& pt);

// Zero set of p over mutable vertices (sorted). Throws NonIndependentZeroSet
// if it is not independent.
std::vector<int> stratum_of(const IceQuiver& q, const ModelPoint& pt);

// Point with p_i = 0 on I. `values` has n+m entries: the mutable values off I
// and all frozen values (entries at I are ignored). `free_primes` gives p'_i
// for i in I, in increasing order of i. Off I, p'_i is computed from the
// relation. Throws RelationUnsatisfiable when M1_i + M2_i != 0 for some i in I.
ModelPoint sample_stratum_point(const IceQuiver& q, const std::vector<int>& I, const std::vector<Rational>& values,
                                const std::vector<Rational>& free_primes);

// Every independent set of mutable vertices (including the empty one), each
// sorted, in lexicographic order of bitmask. Requires n <= 20.
std::vector<std::vector<int>> independent_sets(const IceQuiver& q);

// Random point on the stratum O_I: values off I drawn from a small fixed set
// of nonzero rationals, and for each i in I a frozen vertex f with
// |b_{fi}| = 1 and no arrow to the rest of I is solved for so that the
// relation at i allows x_i = 0. p'_i for i in I is zero or nonzero with equal
// odds. Returns nullopt if some i in I has no such frozen vertex.
std::optional<ModelPoint> random_stratum_point(const IceQuiver& q, const std::vector<int>& I, std::mt19937_64& rng);

// Adds frozen rows to q and value 1 for each new frozen coordinate.
std::pair<IceQuiver, ModelPoint> lift_with_frozens(const IceQuiver& q, const ModelPoint& pt,
                                                   const std::vector<std::vector<std::int64_t>>& rows);

// The same point seen on freeze_vertex(q, k); requires p_k != 0.
ModelPoint freeze_point(const IceQuiver& q, const ModelPoint& pt, int k);

using Value = std::optional<Rational>;  // nullopt: undetermined

// Values of one seed's chart at the point: its extended cluster z, its
// one-step mutations z' (mutable only), and the character of every cluster
// variable under the dilation action, in the coordinates of the initial seed.
struct Chart {
  MutationWord word;
  IceQuiver quiver;
  std::vector<Value> z;
  std::vector<Value> zp;
  std::vector<std::vector<mpz_class>> chi;
};

Chart initial_chart(const IceQuiver& q, const ModelPoint& pt);

struct StepOptions {
  const std::vector<Witness>* witnesses = nullptr;
  // Derive the two-step identity at zero neighbours and append it here.
  std::vector<Witness>* derived = nullptr;
};

// Mutates the last chart of `history` at k and appends the result. Zero
// pivots take their value from z'; new z' values come from the exchange
// relation when the new z_j is nonzero, else from a matching witness, else
// stay undetermined. Throws InconsistentPoint if a relation fails.
void chart_step(std::vector<Chart>& history, int k, const StepOptions& opt);

struct ChartValues {
  MutationWord word;
  std::vector<Value> values;
};

struct Propagation {
  std::vector<Chart> history;
  ChartValues final_values() const { return {history.back().word, history.back().z}; }
};

// Pushes the point through the word using only the supplied witnesses, each
// verified symbolically before use.
Propagation propagate(const IceQuiver& q, const ModelPoint& pt, const MutationWord& word,
                      const std::vector<Witness>& witnesses = {});

enum class Membership { In, Out, Unknown };
std::string to_string(Membership m);

Membership membership_of(const std::vector<Value>& values);

Membership torus_membership(const IceQuiver& q, const ModelPoint& pt, const MutationWord& word,
                            const std::vector<Witness>& witnesses = {});

}  // namespace clusterdeep
