#include "clusterdeep/suites.hpp"

#include <algorithm>
#include <numeric>

#include "clusterdeep/dilation.hpp"
#include "clusterdeep/gallery.hpp"
#include "clusterdeep/tree_cover.hpp"
#include "clusterdeep/variety.hpp"

namespace clusterdeep {

namespace {

std::string describe(const IceQuiver& q, const std::vector<int>& I) {
  std::string s = to_string(q) + " stratum {";
  for (std::size_t t = 0; t < I.size(); ++t) s += (t ? "," : "") + std::to_string(I[t] + 1);
  return s + "}";
}

std::vector<MutationWord> short_words(int n) {
  std::vector<MutationWord> out{{}};
  for (int a = 0; a < n; ++a) {
    out.push_back({a});
    for (int b = 0; b < n; ++b)
      if (b != a) out.push_back({a, b});
  }
  return out;
}

}  // namespace

SuiteReport tree_suite(int count, int max_n, std::uint64_t seed) {
  SuiteReport rep;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(1, max_n);
  std::bernoulli_distribution coin(0.5);
  for (int t = 0; t < count; ++t) {
    const int n = size(rng);
    IceQuiver q = reduced_tree(n, random_tree_edges(n, rng), coin(rng) ? 1 : 0);
    ++rep.instances;
    for (const auto& I : independent_sets(q)) {
      auto pt = random_stratum_point(q, I, rng);
      ++rep.checks;
      if (!pt) {
        rep.failures.push_back("no point sampled on " + describe(q, I));
        continue;
      }
      try {
        TreeCoverResult r = tree_cover(q, *pt);
        CoverCheck c = verify_cover(q, *pt, r);
        const bool trivial = stabilizer(q, *pt).trivial();
        (r.in_torus ? rep.in_torus : rep.deep)++;
        if (!c.ok) rep.failures.push_back("replay failed on " + describe(q, I) + ": " + c.message);
        else if (r.in_torus != trivial)
          rep.failures.push_back("dichotomy broken on " + describe(q, I));
      } catch (const std::exception& e) {
        rep.failures.push_back(describe(q, I) + ": " + e.what());
      }
    }
  }
  return rep;
}

IceQuiver random_acyclic_with_companions(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size(2, 4), weight(1, 3);
  std::bernoulli_distribution arrow(0.6), coin(0.5);
  const int n = size(rng);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  IceQuiver q(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (arrow(rng)) q.set_entry(order[a], order[b], weight(rng));
  for (int i = 0; i < n; ++i) q.set_entry(n + i, i, coin(rng) ? 1 : -1);
  return q;
}

SuiteReport frozen_lift_suite(int count, std::uint64_t seed) {
  SuiteReport rep;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> extra(1, 3), entry(-2, 2);
  for (int t = 0; t < count; ++t) {
    IceQuiver q = random_acyclic_with_companions(rng);
    auto strata = independent_sets(q);
    std::uniform_int_distribution<std::size_t> pick(0, strata.size() - 1);
    const auto& I = strata[pick(rng)];
    auto pt = random_stratum_point(q, I, rng);
    ++rep.instances;
    if (!pt) {
      rep.failures.push_back("no point sampled on " + describe(q, I));
      continue;
    }
    std::vector<std::vector<std::int64_t>> rows(extra(rng), std::vector<std::int64_t>(q.n()));
    for (auto& r : rows)
      for (auto& x : r) x = entry(rng);
    try {
      auto [lq, lp] = lift_with_frozens(q, *pt, rows);
      if (!validate_point(lq, lp).empty()) rep.failures.push_back("lifted point invalid: " + describe(q, I));
      if (stabilizer(q, *pt) != stabilizer(lq, lp))
        rep.failures.push_back("stabilizers differ: " + describe(q, I));
      for (const auto& w : short_words(q.n())) {
        ++rep.checks;
        Membership a = derived_membership(q, *pt, w);
        Membership b = derived_membership(lq, lp, w);
        (a == Membership::In ? rep.in_torus : rep.deep)++;
        if (a != b) rep.failures.push_back("membership differs on a word for " + describe(q, I));
      }
    } catch (const std::exception& e) {
      rep.failures.push_back(describe(q, I) + ": " + e.what());
    }
  }
  return rep;
}

}  // namespace clusterdeep
