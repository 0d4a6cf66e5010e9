#include "clusterdeep/seed.hpp"

#include <algorithm>

#include "clusterdeep/errors.hpp"

namespace clusterdeep {

Seed initial_seed(const IceQuiver& q) {
  Seed s{q, {}, {}};
  for (int i = 0; i < q.size(); ++i) s.cluster.push_back(LaurentPoly::variable(q.size(), i));
  return s;
}

std::pair<Exponent, Exponent> exchange_exponents(const IceQuiver& q, int k) {
  if (k < 0 || k >= q.n()) throw InputError("exchange index must be mutable");
  Exponent pos(q.size(), 0), neg(q.size(), 0);
  for (int i = 0; i < q.size(); ++i) {
    const std::int64_t b = q.b(i, k);
    if (b > 0) pos[i] = static_cast<std::int32_t>(b);
    if (b < 0) neg[i] = static_cast<std::int32_t>(-b);
  }
  return {pos, neg};
}

std::pair<LaurentPoly, LaurentPoly> exchange_binomial(const IceQuiver& q, int k) {
  auto [pos, neg] = exchange_exponents(q, k);
  return {LaurentPoly::monomial(q.size(), pos), LaurentPoly::monomial(q.size(), neg)};
}

std::pair<LaurentPoly, LaurentPoly> exchange_binomial(const Seed& s, int k) {
  return exchange_binomial(s.quiver, k);
}

Seed mutate_seed(const Seed& s, int k, std::size_t depth_guard) {
  if (k < 0 || k >= s.quiver.size()) throw InputError("mutation index out of range");
  if (k >= s.n()) throw InputError("cannot mutate at a frozen vertex");
  Seed r;
  r.quiver = mutate(s.quiver, k);
  r.word = s.word;
  if (!r.word.empty() && r.word.back() == k) r.word.pop_back();
  else r.word.push_back(k);
  if (r.word.size() > depth_guard)
    throw ResourceCap("mutation word longer than the depth guard (" + std::to_string(depth_guard) + ")");
  auto [pos, neg] = exchange_exponents(s.quiver, k);
  const int N = s.size();
  LaurentPoly m1 = LaurentPoly::constant(N, 1), m2 = LaurentPoly::constant(N, 1);
  for (int i = 0; i < N; ++i) {
    if (pos[i]) m1 = m1 * pow(s.cluster[i], static_cast<unsigned>(pos[i]));
    if (neg[i]) m2 = m2 * pow(s.cluster[i], static_cast<unsigned>(neg[i]));
  }
  r.cluster = s.cluster;
  try {
    r.cluster[k] = div_exact(m1 + m2, s.cluster[k]);
  } catch (const NotDivisible& e) {
    throw LaurentPhenomenonViolation("exchange at vertex " + std::to_string(k + 1) +
                                     " is not an exact Laurent division: " + e.what());
  }
  return r;
}

Seed mutate_seed(const Seed& s, const MutationWord& w, std::size_t depth_guard) {
  Seed r = s;
  for (int k : w) r = mutate_seed(r, k, depth_guard);
  return r;
}

LaurentReport check_laurent_phenomenon(const IceQuiver& q, const MutationWord& w) {
  LaurentReport rep;
  rep.final_seed = initial_seed(q);
  for (std::size_t t = 0; t < w.size(); ++t) {
    try {
      rep.final_seed = mutate_seed(rep.final_seed, w[t], std::max(kDefaultDepthGuard, w.size()));
    } catch (const LaurentPhenomenonViolation& e) {
      rep.ok = false;
      rep.failed_step = t;
      rep.message = e.what();
      return rep;
    }
  }
  return rep;
}

std::vector<LaurentPoly> cluster_key(const Seed& s) {
  std::vector<LaurentPoly> key(s.cluster.begin(), s.cluster.begin() + s.n());
  std::sort(key.begin(), key.end());
  return key;
}

std::vector<std::string> default_variable_names(int count) {
  std::vector<std::string> names;
  for (int i = 0; i < count; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

}  // namespace clusterdeep
