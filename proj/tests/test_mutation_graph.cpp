#include "doctest.h"

#include <set>

#include "clusterdeep/families.hpp"
#include "clusterdeep/mutation_graph.hpp"

using namespace clusterdeep;

namespace {

IceQuiver a_n(int n) {
  IceQuiver q(n, 0);
  for (int i = 0; i + 1 < n; ++i) q.set_entry(i, i + 1, 1);
  return q;
}

}  // namespace

TEST_CASE("finite type seed counts") {
  // Type A_n has Catalan(n + 1) seeds.
  ExplorationReport a2 = explore_seeds(a2_quiver(), 20, 1000);
  CHECK(a2.nodes.size() == 5);
  CHECK(a2.frontier_exhausted);
  CHECK(explore_seeds(a_n(3), 20, 1000).nodes.size() == 14);
  CHECK(explore_seeds(a_n(4), 20, 1000).nodes.size() == 42);
}

TEST_CASE("exchange graph of A2 is a pentagon") {
  ExplorationReport r = explore_seeds(a2_quiver(), 20, 1000);
  std::set<std::pair<int, int>> undirected;
  for (const auto& e : r.edges) undirected.insert({std::min(e.from, e.to), std::max(e.from, e.to)});
  CHECK(undirected.size() == 5);
}

TEST_CASE("quiver classes: canonical vs labeled dedup") {
  CHECK(explore_quivers(a2_quiver(), 10, 100, Dedup::Canonical).nodes.size() == 1);
  CHECK(explore_quivers(a2_quiver(), 10, 100, Dedup::Labeled).nodes.size() == 2);
  // A3 class up to isomorphism: oriented path, sink centre, source centre, 3-cycle.
  ExplorationReport a3 = explore_quivers(a_n(3), 10, 1000, Dedup::Canonical);
  CHECK(a3.nodes.size() == 4);
}

TEST_CASE("caps are reported") {
  ExplorationReport r = explore_seeds(star_quiver(2, 3), 10, 10);
  CHECK(r.nodes.size() <= 10);
  CHECK_FALSE(r.frontier_exhausted);
  CHECK(r.caps_hit == "max_nodes");
  ExplorationReport d = explore_seeds(star_quiver(2, 3), 1, 1000);
  CHECK(d.caps_hit == "max_depth");
  CHECK(d.nodes.size() == 4);
}

TEST_CASE("fork triangle has empty fork-less part") {
  ForklessResult f = forkless_part(cyclic_triangle(3, 4, 5), 1000, Dedup::Labeled);
  CHECK(f.complete);
  CHECK(f.members.empty());
}

TEST_CASE("fork-less part of an acyclic abundant quiver is found") {
  ForklessResult f = forkless_part(abundant_triangle(2, 2, 2), 1000, Dedup::Labeled);
  CHECK(f.complete);
  CHECK_FALSE(f.members.empty());
}

TEST_CASE("key bounds hold for the (2,3) star at depth 4") {
  IceQuiver q = star_quiver(2, 3);
  auto key = is_key(q);
  REQUIRE(key.has_value());
  GrowthReport g = verify_entry_growth(q, key_bounds(q, *key), 4);
  CHECK(g.ok);
  CHECK(g.nodes_checked > 10);
}

TEST_CASE("growth check reports a counterexample") {
  // A2 entries drop to 1 (not >= 2).
  GrowthReport g = verify_entry_growth(a2_quiver(), {{0, 1, 2, 1}}, 2);
  CHECK_FALSE(g.ok);
  CHECK(g.counterexample.has_value());
}

TEST_CASE("DOT export names every node") {
  ExplorationReport r = explore_seeds(a2_quiver(), 20, 1000);
  std::string dot = to_dot(r);
  CHECK(dot.find("graph exploration") != std::string::npos);
  CHECK(dot.find("n4") != std::string::npos);
}
