#pragma once

#include <vector>

#include "clusterdeep/laurent.hpp"

namespace clusterdeep {

// A point of the acyclic model attached to a distinguished seed: values of
// x_i and x'_i for each mutable i, and nonzero values of the frozen x_j.
struct ModelPoint {
  std::vector<Rational> p;
  std::vector<Rational> p_prime;
  std::vector<Rational> frozen;

  // Values of the initial extended cluster (p followed by frozen).
  std::vector<Rational> cluster_values() const {
    std::vector<Rational> v = p;
    v.insert(v.end(), frozen.begin(), frozen.end());
    return v;
  }

  friend bool operator==(const ModelPoint&, const ModelPoint&) = default;
};

}  // namespace clusterdeep
