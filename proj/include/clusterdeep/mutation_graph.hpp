#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clusterdeep/quiver.hpp"
#include "clusterdeep/seed.hpp"

namespace clusterdeep {

// Canonical: quivers equal up to relabeling are one node.
// Labeled: exact matrix equality (vertex identities matter).
enum class Dedup { Canonical, Labeled };

struct ExplorationEdge {
  int from;
  int k;
  int to;
};

struct ExplorationReport {
  std::vector<IceQuiver> nodes;
  std::vector<MutationWord> words;  // a word reaching each node from the start
  std::vector<int> depth;
  std::vector<ExplorationEdge> edges;
  // Cluster of each node (seed exploration only).
  std::vector<std::vector<LaurentPoly>> clusters;
  bool frontier_exhausted = false;
  std::string caps_hit;  // "", "max_depth" or "max_nodes"
};

ExplorationReport explore_quivers(const IceQuiver& q, int max_depth, int max_nodes,
                                  Dedup dedup = Dedup::Canonical);

// Seeds deduplicated by the unordered set of mutable cluster variables.
ExplorationReport explore_seeds(const IceQuiver& q, int max_depth, int max_nodes);

struct ForklessResult {
  bool complete = false;  // false: the cap was exceeded
  std::vector<IceQuiver> members;
  std::vector<MutationWord> words;
  int forks_on_boundary = 0;
};

// BFS through non-fork quivers only; forks are seen but never expanded.
ForklessResult forkless_part(const IceQuiver& q, int max_nodes, Dedup dedup = Dedup::Canonical);

// |b'_{ij}| >= min_abs and divisor | b'_{ij} at every explored node.
struct EntryBound {
  int i;
  int j;
  std::int64_t min_abs = 0;
  std::int64_t divisor = 1;
};

struct GrowthReport {
  bool ok = true;
  int nodes_checked = 0;
  bool frontier_exhausted = false;
  struct Counterexample {
    MutationWord word;
    int i;
    int j;
    std::int64_t value;
    std::int64_t min_abs;
    std::int64_t divisor;
  };
  std::optional<Counterexample> counterexample;
};

GrowthReport verify_entry_growth(const IceQuiver& q, const std::vector<EntryBound>& bounds, int max_depth,
                                 int max_nodes = 1000000);

// Bounds a key guarantees: |b'_{ij}| >= |b_{ij}| for a thin pair entry of 0,
// otherwise min over the transposition of the pair.
std::vector<EntryBound> key_bounds(const IceQuiver& q, const KeyPair& key);

std::string to_dot(const ExplorationReport& r);

}  // namespace clusterdeep
