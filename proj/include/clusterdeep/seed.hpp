#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clusterdeep/laurent.hpp"
#include "clusterdeep/quiver.hpp"

namespace clusterdeep {

using MutationWord = std::vector<int>;  // 0-based mutable indices

// Default cap on the mutation-word length of a symbolic seed.
constexpr std::size_t kDefaultDepthGuard = 64;

// A quiver together with its extended cluster, written as Laurent polynomials
// in the initial variables x_1..x_{n+m}. Frozen entries never change.
struct Seed {
  IceQuiver quiver;
  std::vector<LaurentPoly> cluster;
  MutationWord word;

  int n() const { return quiver.n(); }
  int size() const { return quiver.size(); }
  friend bool operator==(const Seed& a, const Seed& b) {
    return a.quiver == b.quiver && a.cluster == b.cluster;
  }
};

Seed initial_seed(const IceQuiver& q);

// Seed mutation at mutable k. A repeated letter cancels in the stored word.
// Throws LaurentPhenomenonViolation if an exchange division is inexact and
// ResourceCap if the word would exceed `depth_guard`.
Seed mutate_seed(const Seed& s, int k, std::size_t depth_guard = kDefaultDepthGuard);
Seed mutate_seed(const Seed& s, const MutationWord& w, std::size_t depth_guard = kDefaultDepthGuard);

// The two monomials of the exchange binomial at k, as monomials in the n+m
// abstract slots of the current cluster: M1 = prod z_i^[b_ik]+, M2 = prod z_i^[-b_ik]+.
std::pair<LaurentPoly, LaurentPoly> exchange_binomial(const Seed& s, int k);
std::pair<LaurentPoly, LaurentPoly> exchange_binomial(const IceQuiver& q, int k);

// Exponent vectors of the two exchange monomials.
std::pair<Exponent, Exponent> exchange_exponents(const IceQuiver& q, int k);

struct LaurentReport {
  bool ok = true;
  std::optional<std::size_t> failed_step;
  std::string message;
  Seed final_seed;
};

LaurentReport check_laurent_phenomenon(const IceQuiver& q, const MutationWord& w);

// Order-independent key of the mutable part of a cluster.
std::vector<LaurentPoly> cluster_key(const Seed& s);

// Names "x1".."x{n+m}" used when printing initial variables.
std::vector<std::string> default_variable_names(int count);

}  // namespace clusterdeep
