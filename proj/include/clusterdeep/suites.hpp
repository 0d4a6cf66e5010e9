#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "clusterdeep/point.hpp"
#include "clusterdeep/quiver.hpp"

namespace clusterdeep {

// Randomized property suites shared by the CLI and the acceptance binary.
// Every run is a pure function of its arguments.

struct SuiteReport {
  int instances = 0;  // quivers drawn
  int checks = 0;     // points (or point/word pairs) checked
  int in_torus = 0;
  int deep = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// `count` reduced sink/source trees with 1..max_n mutable vertices, one
// sampled point per stratum. Each point must get a replay-verified cover
// exactly when its stabilizer is trivial, and a replay-verified stabilizer
// element otherwise.
SuiteReport tree_suite(int count, int max_n, std::uint64_t seed);

// Acyclic quiver on 2..4 mutable vertices with weights 1..3 and one frozen
// companion per mutable vertex (so every stratum has points).
IceQuiver random_acyclic_with_companions(std::mt19937_64& rng);

// `count` random (quiver, point, 1..3 extra frozen rows) instances: the lifted
// point validates, the stabilizers agree, and torus membership agrees on
// every word of length <= 2.
SuiteReport frozen_lift_suite(int count, std::uint64_t seed);

}  // namespace clusterdeep
