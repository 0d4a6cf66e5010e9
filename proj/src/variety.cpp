#include "clusterdeep/variety.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <set>

#include "clusterdeep/errors.hpp"

namespace clusterdeep {

namespace {

void check_shape(const IceQuiver& q, const ModelPoint& pt) {
  if (static_cast<int>(pt.p.size()) != q.n() || static_cast<int>(pt.p_prime.size()) != q.n() ||
      static_cast<int>(pt.frozen.size()) != q.m())
    throw InvalidPoint("point shape does not match the quiver (expected " + std::to_string(q.n()) + " p, " +
                       std::to_string(q.n()) + " p', " + std::to_string(q.m()) + " frozen values)");
  for (const auto& f : pt.frozen)
    if (f == 0) throw InvalidPoint("frozen coordinates must be nonzero");
}

Rational monomial_value(const Exponent& e, const std::vector<Rational>& v) {
  Rational r = 1;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (int t = 0; t < e[i]; ++t) r *= v[i];
  return r;
}

Rational binomial_value(const IceQuiver& q, int k, const std::vector<Rational>& v) {
  auto [pos, neg] = exchange_exponents(q, k);
  return monomial_value(pos, v) + monomial_value(neg, v);
}

Value monomial_partial(const Exponent& e, const std::vector<Value>& v) {
  bool unknown = false;
  Rational r = 1;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!v[i]) {
      unknown = true;
      continue;
    }
    if (*v[i] == 0) return Rational(0);
    for (int t = 0; t < e[i]; ++t) r *= *v[i];
  }
  if (unknown) return std::nullopt;
  return r;
}

Value binomial_partial(const IceQuiver& q, int k, const std::vector<Value>& v) {
  auto [pos, neg] = exchange_exponents(q, k);
  Value a = monomial_partial(pos, v), b = monomial_partial(neg, v);
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

std::vector<Value> chart_generators(const Chart& c) {
  std::vector<Value> g = c.z;
  g.insert(g.end(), c.zp.begin(), c.zp.end());
  return g;
}

Value witness_value(const Witness& w, const Chart& base) {
  auto g = chart_generators(base);
  auto num = evaluate_partial(w.numerator, g);
  auto den = evaluate_partial(w.denominator, g);
  if (!num || !den || *den == 0) return std::nullopt;
  return *num / *den;
}

const Chart* find_chart(const std::vector<Chart>& history, const MutationWord& w) {
  for (auto it = history.rbegin(); it != history.rend(); ++it)
    if (it->word == w) return &*it;
  return nullptr;
}

std::string vertex_label(int v) { return std::to_string(v + 1); }

}  // namespace

std::vector<RelationViolation> validate_point(const IceQuiver& q, const ModelPoint& pt) {
  check_shape(q, pt);
  if (!is_acyclic(q)) throw NotAcyclic("the mutable part has an oriented cycle");
  auto vals = pt.cluster_values();
  std::vector<RelationViolation> out;
  for (int i = 0; i < q.n(); ++i) {
    Rational lhs = pt.p[i] * pt.p_prime[i];
    Rational rhs = binomial_value(q, i, vals);
    if (lhs != rhs) out.push_back({i, lhs, rhs});
  }
  return out;
}

void require_valid(const IceQuiver& q, const ModelPoint& pt) {
  auto v = validate_point(q, pt);
  if (v.empty()) return;
  std::string msg = "relation fails at vertex";
  for (std::size_t i = 0; i < v.size(); ++i) {
    msg += (i ? ", " : " ") + vertex_label(v[i].vertex) + " (" + to_string(v[i].lhs) + " != " + to_string(v[i].rhs) +
           ")";
  }
  throw InvalidPoint(msg);
}

std::vector<int> stratum_of(const IceQuiver& q, const ModelPoint& pt) {
  check_shape(q, pt);
  std::vector<int> I;
  for (int i = 0; i < q.n(); ++i)
    if (pt.p[i] == 0) I.push_back(i);
  for (std::size_t a = 0; a < I.size(); ++a)
    for (std::size_t b = a + 1; b < I.size(); ++b)
      if (q.b(I[a], I[b]) != 0)
        throw NonIndependentZeroSet("adjacent vertices " + vertex_label(I[a]) + " and " + vertex_label(I[b]) +
                                    " both vanish");
  return I;
}

ModelPoint sample_stratum_point(const IceQuiver& q, const std::vector<int>& I, const std::vector<Rational>& values,
                                const std::vector<Rational>& free_primes) {
  if (static_cast<int>(values.size()) != q.size()) throw InputError("expected one value per vertex");
  if (free_primes.size() != I.size()) throw InputError("expected one p' value per vertex of the stratum");
  std::set<int> in(I.begin(), I.end());
  if (in.size() != I.size()) throw InputError("stratum lists a vertex twice");
  for (int i : I) {
    if (i < 0 || i >= q.n()) throw InputError("stratum vertex out of range");
    for (int j : I)
      if (q.b(i, j) != 0) throw InputError("stratum is not an independent set", "NotIndependent");
  }
  std::vector<Rational> v = values;
  for (int i : I) v[i] = 0;
  for (int i = 0; i < q.size(); ++i)
    if (!in.count(i) && v[i] == 0) throw InputError("values off the stratum must be nonzero");

  ModelPoint pt;
  pt.p.assign(v.begin(), v.begin() + q.n());
  pt.frozen.assign(v.begin() + q.n(), v.end());
  pt.p_prime.assign(q.n(), 0);
  std::size_t idx = 0;
  for (int i = 0; i < q.n(); ++i) {
    Rational rhs = binomial_value(q, i, v);
    if (in.count(i)) {
      if (rhs != 0)
        throw RelationUnsatisfiable("M1 + M2 does not vanish at vertex " + vertex_label(i) + " (value " +
                                    to_string(rhs) + ")");
      pt.p_prime[i] = free_primes[idx++];
    } else {
      pt.p_prime[i] = rhs / v[i];
    }
  }
  return pt;
}

std::vector<std::vector<int>> independent_sets(const IceQuiver& q) {
  const int n = q.n();
  if (n > 20) throw ResourceCap("too many mutable vertices to enumerate independent sets");
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> I;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      for (int j : I)
        if (q.b(i, j) != 0) ok = false;
      I.push_back(i);
    }
    if (ok) out.push_back(I);
  }
  return out;
}

std::optional<ModelPoint> random_stratum_point(const IceQuiver& q, const std::vector<int>& I, std::mt19937_64& rng) {
  static const Rational kPool[] = {Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(1, 2),
                                   Rational(-3), Rational(3, 2)};
  std::uniform_int_distribution<int> pick(0, static_cast<int>(std::size(kPool)) - 1);
  std::set<int> in(I.begin(), I.end());
  std::vector<Rational> v(q.size());
  for (int i = 0; i < q.size(); ++i) v[i] = in.count(i) ? Rational(0) : kPool[pick(rng)];

  std::set<int> used;
  for (int i : I) {
    int solver = -1;
    for (int f = q.n(); f < q.size() && solver < 0; ++f) {
      if (used.count(f) || (q.b(f, i) != 1 && q.b(f, i) != -1)) continue;
      bool alone = true;
      for (int j : I)
        if (j != i && q.b(f, j) != 0) alone = false;
      if (alone) solver = f;
    }
    if (solver < 0) return std::nullopt;
    used.insert(solver);
    // The relation at i is x_f * A + B with A, B independent of x_f.
    auto [pos, neg] = exchange_exponents(q, i);
    Exponent& with = pos[solver] != 0 ? pos : neg;
    Exponent& without = pos[solver] != 0 ? neg : pos;
    with[solver] = 0;
    v[solver] = -monomial_value(without, v) / monomial_value(with, v);
  }
  std::vector<Rational> primes;
  std::bernoulli_distribution coin(0.5);
  for (std::size_t t = 0; t < I.size(); ++t) primes.push_back(coin(rng) ? Rational(0) : kPool[pick(rng)]);
  return sample_stratum_point(q, I, v, primes);
}

std::pair<IceQuiver, ModelPoint> lift_with_frozens(const IceQuiver& q, const ModelPoint& pt,
                                                   const std::vector<std::vector<std::int64_t>>& rows) {
  check_shape(q, pt);
  IceQuiver lifted = add_frozen_rows(q, rows);
  ModelPoint p2 = pt;
  p2.frozen.resize(pt.frozen.size() + rows.size(), 1);
  return {lifted, p2};
}

ModelPoint freeze_point(const IceQuiver& q, const ModelPoint& pt, int k) {
  check_shape(q, pt);
  if (k < 0 || k >= q.n()) throw InputError("can only freeze a mutable vertex");
  if (pt.p[k] == 0) throw InvalidPoint("cannot freeze a vertex whose value is zero");
  ModelPoint r;
  for (int i = 0; i < q.n(); ++i) {
    if (i == k) continue;
    r.p.push_back(pt.p[i]);
    r.p_prime.push_back(pt.p_prime[i]);
  }
  r.frozen = pt.frozen;
  r.frozen.push_back(pt.p[k]);
  return r;
}

Chart initial_chart(const IceQuiver& q, const ModelPoint& pt) {
  check_shape(q, pt);
  Chart c;
  c.quiver = q;
  for (const auto& v : pt.cluster_values()) c.z.emplace_back(v);
  for (const auto& v : pt.p_prime) c.zp.emplace_back(v);
  const int N = q.size();
  c.chi.assign(N, std::vector<mpz_class>(N, 0));
  for (int i = 0; i < N; ++i) c.chi[i][i] = 1;
  return c;
}

void chart_step(std::vector<Chart>& history, int k, const StepOptions& opt) {
  const Chart& c = history.back();
  const IceQuiver& Q = c.quiver;
  if (k < 0 || k >= Q.n()) throw InputError("mutation index out of range");
  const int N = Q.size(), n = Q.n();

  Value pk = binomial_partial(Q, k, c.z);
  Value new_zk = c.zp[k];
  if (c.z[k] && *c.z[k] != 0) {
    if (pk) {
      Rational val = *pk / *c.z[k];
      if (c.zp[k] && *c.zp[k] != val)
        throw InconsistentPoint("exchange relation fails at vertex " + vertex_label(k) + " in chart " +
                                std::to_string(c.word.size()));
      new_zk = val;
    }
  } else if (c.z[k] && pk && *pk != 0) {
    throw InconsistentPoint("zero cluster value at vertex " + vertex_label(k) + " but M1 + M2 = " + to_string(*pk));
  }

  Chart d;
  d.word = c.word;
  d.word.push_back(k);
  d.quiver = mutate(Q, k);
  d.z = c.z;
  d.z[k] = new_zk;
  d.zp = c.zp;
  d.zp[k] = c.z[k];
  d.chi = c.chi;
  for (int t = 0; t < N; ++t) {
    mpz_class s = -c.chi[k][t];
    for (int l = 0; l < N; ++l)
      if (Q.b(l, k) > 0) s += Q.b(l, k) * c.chi[l][t];
    d.chi[k][t] = s;
  }

  for (int j = 0; j < n; ++j) {
    if (j == k || Q.b(k, j) == 0) continue;
    Value pj = binomial_partial(d.quiver, j, d.z);
    Value val;
    if (d.z[j] && *d.z[j] != 0 && pj) {
      val = *pj / *d.z[j];
    } else {
      if (d.z[j] && *d.z[j] == 0 && pj && *pj != 0)
        throw InconsistentPoint("zero cluster value at vertex " + vertex_label(j) + " but M1 + M2 = " +
                                to_string(*pj));
      if (opt.witnesses) {
        for (const auto& w : *opt.witnesses) {
          if (w.vertex != j || w.target_word != d.word) continue;
          const Chart* base = w.base_word == d.word ? &d : find_chart(history, w.base_word);
          if (!base) continue;
          val = witness_value(w, *base);
          if (val) break;
        }
      }
      if (!val && opt.derived) {
        if (auto w = two_step_witness(Q, c.word, k, j)) {
          val = witness_value(*w, c);
          if (val) opt.derived->push_back(*w);
        }
      }
    }
    d.zp[j] = val;
  }
  history.push_back(std::move(d));
}

Propagation propagate(const IceQuiver& q, const ModelPoint& pt, const MutationWord& word,
                      const std::vector<Witness>& witnesses) {
  require_valid(q, pt);
  for (int k : word)
    if (k < 0 || k >= q.n()) throw InputError("mutation index out of range");
  SymbolicCache cache(q);
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    auto r = verify_witness(cache, witnesses[i]);
    if (!r.ok) throw InputError("witness " + std::to_string(i + 1) + " does not verify: " + r.message, "WitnessInvalid");
  }
  Propagation p;
  p.history.push_back(initial_chart(q, pt));
  StepOptions opt;
  opt.witnesses = &witnesses;
  for (int k : word) chart_step(p.history, k, opt);
  return p;
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::In: return "InTorus";
    case Membership::Out: return "NotInTorus";
    default: return "Undetermined";
  }
}

Membership membership_of(const std::vector<Value>& values) {
  bool unknown = false;
  for (const auto& v : values) {
    if (!v) unknown = true;
    else if (*v == 0) return Membership::Out;
  }
  return unknown ? Membership::Unknown : Membership::In;
}

Membership torus_membership(const IceQuiver& q, const ModelPoint& pt, const MutationWord& word,
                            const std::vector<Witness>& witnesses) {
  return membership_of(propagate(q, pt, word, witnesses).history.back().z);
}

}  // namespace clusterdeep
