#include "doctest.h"

#include "clusterdeep/errors.hpp"
#include "clusterdeep/families.hpp"
#include "clusterdeep/suites.hpp"
#include "clusterdeep/tree_cover.hpp"
#include "support.hpp"

using namespace clusterdeep;
using test::ints;

namespace {

// Linear path 1 -> 2 -> ... -> n without frozen vertices.
IceQuiver oriented_path(int n) {
  IceQuiver q(n, 0);
  for (int i = 0; i + 1 < n; ++i) q.set_entry(i, i + 1, 1);
  return q;
}

}  // namespace

TEST_CASE("sink/source flips make the orientation bipartite") {
  for (int n = 1; n <= 6; ++n) {
    IceQuiver q = oriented_path(n);
    CHECK(is_sink_source(mutate(q, sink_source_word(q))));
  }
  std::mt19937_64 rng(71);
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + t % 5;
    IceQuiver q(n, 0);
    for (auto [a, b] : random_tree_edges(n, rng)) q.set_entry(a, b, rng() % 2 ? 1 : -1);
    MutationWord w = sink_source_word(q);
    CHECK(is_sink_source(mutate(q, w)));
    // Every letter is a sink or a source when applied.
    IceQuiver cur = q;
    for (int k : w) {
      CHECK((is_mutable_sink(cur, k) || is_mutable_source(cur, k)));
      cur = mutate(cur, k);
    }
  }
}

TEST_CASE("random tree edges form a tree") {
  std::mt19937_64 rng(72);
  for (int n = 1; n <= 8; ++n) {
    auto edges = random_tree_edges(n, rng);
    CHECK(static_cast<int>(edges.size()) == std::max(0, n - 1));
    IceQuiver q(n, 0);
    for (auto [a, b] : edges) q.set_entry(a, b, 1);
    if (n > 1) CHECK(is_tree(q));
  }
}

TEST_CASE("reduced tree shape") {
  IceQuiver q = reduced_tree(3, {{0, 1}, {1, 2}});
  CHECK(q.m() == 3);
  CHECK(is_sink_source(q));
  for (int v = 0; v < 3; ++v) {
    const std::int64_t f = q.b(3 + v, v);
    CHECK(f == (is_mutable_source(q, v) ? -1 : 1));
  }
  CHECK(is_sink_source(reduce_tree_form(oriented_path(4))));
  CHECK(reduce_tree_form(oriented_path(4)).m() == 4);
}

TEST_CASE("non-trees are rejected") {
  IceQuiver q = star_quiver(2, 3);
  try {
    tree_cover(q, test::point({0, -1, 1}, {0, -1, 1}));
    FAIL("expected NotTree");
  } catch (const InputError& e) {
    CHECK(e.code() == "NotTree");
  }
}

TEST_CASE("A2 with no frozen vertices") {
  IceQuiver q = a2_quiver();
  for (const auto& pt : {test::point({-1, 0}, {-1, 0}), test::point({0, -1}, {0, -1}),
                         test::point({-1, -1}, {0, 0})}) {
    TreeCoverResult r = tree_cover(q, pt);
    CHECK(r.in_torus);
    CHECK(verify_cover(q, pt, r).ok);
  }
}

TEST_CASE("the rank-2 tree covers x2 = x2' = 0") {
  IceQuiver q = rank2_quiver(1);
  ModelPoint pt = sample_stratum_point(q, {1}, ints({1, 0, 1, -1}), ints({0}));
  TreeCoverResult r = tree_cover(q, pt);
  CHECK(r.in_torus);
  CHECK(verify_cover(q, pt, r).ok);
  CHECK(stabilizer(q, pt).trivial());
}

TEST_CASE("a tampered cover fails the replay") {
  IceQuiver q = reduced_tree(3, {{0, 1}, {1, 2}});
  std::mt19937_64 rng(73);
  for (const auto& I : independent_sets(q)) {
    auto pt = random_stratum_point(q, I, rng);
    REQUIRE(pt.has_value());
    TreeCoverResult r = tree_cover(q, *pt);
    REQUIRE(verify_cover(q, *pt, r).ok);
    if (r.in_torus) {
      if (r.witnesses.empty()) continue;
      TreeCoverResult bad = r;
      bad.witnesses[0].numerator = bad.witnesses[0].numerator + bad.witnesses[0].denominator;
      CHECK_FALSE(verify_cover(q, *pt, bad).ok);
    } else {
      TreeCoverResult bad = r;
      bad.element->exponents.assign(bad.element->exponents.size(), 0);
      CHECK_FALSE(verify_cover(q, *pt, bad).ok);
    }
  }
}

TEST_CASE("arbitrary frozen rows and orientations") {
  std::mt19937_64 rng(74);
  int deep = 0, covered = 0;
  for (int t = 0; t < 40; ++t) {
    const int n = 2 + t % 4;
    IceQuiver q(n, n);
    for (auto [a, b] : random_tree_edges(n, rng)) q.set_entry(a, b, rng() % 2 ? 1 : -1);
    for (int i = 0; i < n; ++i) q.set_entry(n + i, i, rng() % 2 ? 1 : -1);
    // Extra frozen arrows with larger weights.
    for (int i = 0; i < n; ++i)
      for (int f = n; f < 2 * n; ++f)
        if (f != n + i && rng() % 3 == 0) q.set_entry(f, i, static_cast<std::int64_t>(rng() % 5) - 2);
    for (const auto& I : independent_sets(q)) {
      auto pt = random_stratum_point(q, I, rng);
      if (!pt) continue;
      TreeCoverResult r = tree_cover(q, *pt);
      CHECK(verify_cover(q, *pt, r).ok);
      CHECK(r.in_torus == stabilizer(q, *pt).trivial());
      (r.in_torus ? covered : deep)++;
    }
  }
  CHECK(covered > 0);
  CHECK(deep > 0);
}

TEST_CASE("small tree suite") {
  SuiteReport r = tree_suite(60, 5, 9);
  CHECK(r.ok());
  CHECK(r.deep > 0);
  CHECK(r.in_torus > 0);
}
