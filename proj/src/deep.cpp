#include "clusterdeep/deep.hpp"

#include <algorithm>
#include <numeric>

#include "clusterdeep/errors.hpp"
#include "clusterdeep/families.hpp"
#include "clusterdeep/tree_cover.hpp"

namespace clusterdeep {

namespace {

std::string label(int v) { return std::to_string(v + 1); }

DeepVerdict in_torus(MutationWord w, std::vector<Witness> ws, std::string reason) {
  DeepVerdict v;
  v.kind = DeepVerdict::Kind::InTorus;
  v.word = std::move(w);
  v.witnesses = std::move(ws);
  v.reason = std::move(reason);
  return v;
}

DeepVerdict unknown(std::string reason) {
  DeepVerdict v;
  v.reason = std::move(reason);
  return v;
}

bool search_rec(std::vector<Chart>& history, std::vector<std::vector<Witness>>& used, int depth) {
  if (membership_of(history.back().z) == Membership::In) return true;
  if (depth == 0) return false;
  const int n = history.back().quiver.n();
  for (int k = 0; k < n; ++k) {
    if (!history.back().word.empty() && history.back().word.back() == k) continue;
    std::vector<Witness> derived;
    StepOptions opt;
    opt.derived = &derived;
    chart_step(history, k, opt);
    used.push_back(std::move(derived));
    if (search_rec(history, used, depth - 1)) return true;
    used.pop_back();
    history.pop_back();
  }
  return false;
}

}  // namespace

std::string to_string(CertKind k) {
  switch (k) {
    case CertKind::GcdStar: return "GcdStar";
    case CertKind::Key: return "Key";
    case CertKind::AbundantAcyclic: return "AbundantAcyclic";
    default: return "ForkBounded";
  }
}

CertKind parse_cert_kind(const std::string& s) {
  if (s == "gcd-star" || s == "GcdStar") return CertKind::GcdStar;
  if (s == "key" || s == "Key") return CertKind::Key;
  if (s == "abundant" || s == "AbundantAcyclic") return CertKind::AbundantAcyclic;
  if (s == "fork" || s == "ForkBounded") return CertKind::ForkBounded;
  throw InputError("unknown certificate kind '" + s + "' (expected gcd-star, key, abundant or fork)");
}

std::string to_string(DeepVerdict::Kind k) {
  switch (k) {
    case DeepVerdict::Kind::Deep: return "Deep";
    case DeepVerdict::Kind::DeepByStabilizer: return "DeepByStabilizer";
    case DeepVerdict::Kind::InTorus: return "InTorus";
    default: return "Unknown";
  }
}

std::optional<Certificate> cert_gcd_star(const IceQuiver& q) {
  IceQuiver m = mutable_part(q);
  if (m.n() != 3 || m.b(1, 0) <= 0 || m.b(2, 0) <= 0 || m.b(1, 2) != 0)
    throw WrongShape("mutable part is not a star 2 -> 1 <- 3");
  const std::int64_t b = m.b(1, 0), a = m.b(2, 0);
  if (std::gcd(a, b) != 1 || std::min(a, b) < 2) return std::nullopt;
  Certificate c;
  c.kind = CertKind::GcdStar;
  c.gcd = gcd_vector(m);
  c.evidence = "gcd vector (" + std::to_string(c.gcd[0]) + "," + std::to_string(c.gcd[1]) + "," +
               std::to_string(c.gcd[2]) + "): b'_12 in " + std::to_string(b) + "Z and b'_13 in " + std::to_string(a) +
               "Z with coprime gcds, so neither vanishes";
  return c;
}

std::optional<Certificate> cert_key(const IceQuiver& q) {
  IceQuiver m = mutable_part(q);
  if (m.n() < 3) return std::nullopt;
  auto kp = is_key(m, KeyMode::TranspositionTolerant);
  if (!kp || kp->k == 0 || kp->k2 == 0) return std::nullopt;
  for (int i = 1; i < m.n(); ++i)
    if (std::abs(m.b(0, i)) < 2) return std::nullopt;
  Certificate c;
  c.kind = CertKind::Key;
  c.key = kp;
  c.evidence = "key with distinguished pair {" + label(kp->k) + "," + label(kp->k2) + "}" +
               (kp->strict_sign_condition ? "" : " (transposition-tolerant reading)") +
               (m.b(kp->k, kp->k2) == 0 ? "; entries never drop below their initial values"
                                         : "; entries never drop below the transposition minimum");
  return c;
}

std::optional<Certificate> cert_abundant_acyclic(const IceQuiver& q) {
  IceQuiver m = mutable_part(q);
  if (m.n() < 2 || !is_abundant(m) || !is_acyclic(m)) return std::nullopt;
  Certificate c;
  c.kind = CertKind::AbundantAcyclic;
  c.evidence = "abundant acyclic mutable part; every mutation-equivalent quiver is abundant";
  return c;
}

std::optional<Certificate> cert_fork_bounded(const IceQuiver& q, int cap, std::string* reason) {
  if (cap <= 0) throw InputError("fork cap must be positive");
  IceQuiver m = mutable_part(q);
  auto fail = [&](const std::string& why) -> std::optional<Certificate> {
    if (reason) *reason = why;
    return std::nullopt;
  };
  if (m.n() < 2) return fail("rank below 2");
  ForklessResult f = forkless_part(m, cap, Dedup::Labeled);
  if (!f.complete) return fail("fork-less part exceeded the cap of " + std::to_string(cap));
  for (std::size_t t = 0; t < f.members.size(); ++t)
    for (int i = 1; i < m.n(); ++i)
      if (std::abs(f.members[t].b(0, i)) < 2)
        return fail("fork-less member " + std::to_string(t) + " has |b_1" + label(i) + "| < 2");
  Certificate c;
  c.kind = CertKind::ForkBounded;
  c.cap = cap;
  c.forkless_size = f.members.size();
  c.evidence = "fork-less part has " + std::to_string(f.members.size()) +
               " labelled members, all with |b_1i| >= 2; forks are abundant";
  return c;
}

std::optional<Certificate> find_certificate(const IceQuiver& q, CertKind kind, int fork_cap) {
  switch (kind) {
    case CertKind::GcdStar:
      try {
        return cert_gcd_star(q);
      } catch (const WrongShape&) {
        return std::nullopt;
      }
    case CertKind::Key: return cert_key(q);
    case CertKind::AbundantAcyclic: return cert_abundant_acyclic(q);
    default: return cert_fork_bounded(q, fork_cap);
  }
}

DeepVerdict so_may_deep(const IceQuiver& q, const ModelPoint& pt, CertKind kind, int fork_cap) {
  require_valid(q, pt);
  if (q.n() < 1 || pt.p[0] != 0 || pt.p_prime[0] != 0) return unknown("hypothesis x1 = x1' = 0 fails");
  for (int j = 1; j < q.n(); ++j)
    if (pt.p[j] == 0) return unknown("hypothesis x" + label(j) + " != 0 fails");
  auto cert = find_certificate(q, kind, fork_cap);
  if (!cert) return unknown("certificate " + to_string(kind) + " does not apply");
  DeepVerdict v;
  v.kind = DeepVerdict::Kind::Deep;
  v.certificate = cert;
  v.reason = "x1 = x1' = 0 with every other cluster value nonzero; " + cert->evidence;
  return v;
}

std::optional<StabilizerElement> nontrivial_stabilizer_element(const IceQuiver& q, const ModelPoint& pt) {
  auto cs = stabilizer_constraints(q, pt);
  for (const auto& g : group_generators(cs, q.size()))
    if (g.nontrivial()) return g;
  return std::nullopt;
}

DeepVerdict rank2_classify(std::int64_t a, const ModelPoint& pt) {
  if (a < 1) throw InputError("rank-2 weight must be positive");
  IceQuiver q = rank2_quiver(a);
  require_valid(q, pt);
  auto I = stratum_of(q, pt);
  if (I.empty()) return in_torus({}, {}, "all cluster values nonzero");
  const int k = I[0];
  if (pt.p_prime[k] != 0) {
    if (torus_membership(q, pt, {k}) != Membership::In) throw Error("InternalError", "rank-2 one-step cover failed");
    return in_torus({k}, {}, "x" + label(k) + " = 0 but x" + label(k) + "' != 0");
  }
  if (a >= 2) {
    StabilizerElement e{StabilizerElement::Kind::Torsion, a, std::vector<mpz_class>(4, 0)};
    e.exponents[k] = 1;
    if (!satisfies(e, stabilizer_constraints(q, pt))) throw Error("InternalError", "rank-2 root of unity fails");
    DeepVerdict v;
    v.kind = DeepVerdict::Kind::DeepByStabilizer;
    v.element = e;
    v.stabilizer = stabilizer(q, pt);
    v.reason = "x" + label(k) + " = x" + label(k) + "' = 0: a primitive " + std::to_string(a) +
               "-th root of unity at t" + label(k) + " fixes the point";
    return v;
  }
  if (auto found = search_cover(q, pt, 4)) return in_torus(found->first, found->second, "found among the five seeds");
  return unknown("no covering seed found");
}

std::optional<std::pair<MutationWord, std::vector<Witness>>> search_cover(const IceQuiver& q, const ModelPoint& pt,
                                                                          int depth) {
  require_valid(q, pt);
  std::vector<Chart> history{initial_chart(q, pt)};
  std::vector<std::vector<Witness>> used;
  if (!search_rec(history, used, depth)) return std::nullopt;
  std::vector<Witness> all;
  for (auto& step : used)
    for (auto& w : step) all.push_back(std::move(w));
  return std::make_pair(history.back().word, all);
}

ModelPoint relabel_point(const ModelPoint& pt, const std::vector<int>& perm, int n) {
  ModelPoint r = pt;
  for (int i = 0; i < n; ++i) {
    r.p[perm[i]] = pt.p[i];
    r.p_prime[perm[i]] = pt.p_prime[i];
  }
  return r;
}

DeepVerdict deep_check(const IceQuiver& q, const ModelPoint& pt, std::optional<CertKind> kind, int fork_cap) {
  require_valid(q, pt);
  auto I = stratum_of(q, pt);
  if (I.empty()) return in_torus({}, {}, "all cluster values nonzero");

  bool primes_nonzero = true;
  for (int k : I)
    if (pt.p_prime[k] == 0) primes_nonzero = false;
  if (primes_nonzero && torus_membership(q, pt, I) == Membership::In)
    return in_torus(I, {}, "mutating the independent zero set makes every value nonzero");

  if (auto e = nontrivial_stabilizer_element(q, pt)) {
    DeepVerdict v;
    v.kind = DeepVerdict::Kind::DeepByStabilizer;
    v.element = e;
    v.stabilizer = stabilizer(q, pt);
    v.reason = "stabilizer " + v.stabilizer.to_string();
    return v;
  }

  if (I.size() == 1 && pt.p_prime[I[0]] == 0) {
    const int v0 = I[0];
    std::vector<int> perm(q.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[0], perm[v0]);
    IceQuiver rq = relabel(q, perm);
    ModelPoint rp = relabel_point(pt, perm, q.n());
    std::vector<CertKind> kinds;
    if (kind) kinds = {*kind};
    else kinds = {CertKind::GcdStar, CertKind::Key, CertKind::AbundantAcyclic, CertKind::ForkBounded};
    for (CertKind k : kinds) {
      DeepVerdict v = so_may_deep(rq, rp, k, fork_cap);
      if (v.kind == DeepVerdict::Kind::Deep) {
        if (v0 != 0) v.reason += " (vertices 1 and " + label(v0) + " swapped)";
        return v;
      }
    }
  }

  if (is_tree(q)) {
    TreeCoverResult r = tree_cover(q, pt);
    if (r.in_torus) return in_torus(r.word, r.witnesses, "tree cover");
    DeepVerdict v;
    v.kind = DeepVerdict::Kind::DeepByStabilizer;
    v.element = r.element;
    v.stabilizer = stabilizer(q, pt);
    v.reason = "tree cover produced a stabilizer element";
    return v;
  }

  if (auto found = search_cover(q, pt, 4)) return in_torus(found->first, found->second, "bounded search");
  return unknown("no certificate applies and no covering seed within 4 mutations");
}

MysteryVerdict is_mysterious(const IceQuiver& q, const ModelPoint& pt, std::optional<CertKind> kind, int fork_cap) {
  MysteryVerdict m;
  m.verdict = deep_check(q, pt, kind, fork_cap);
  m.stabilizer = stabilizer(q, pt);
  switch (m.verdict.kind) {
    case DeepVerdict::Kind::Deep:
      m.mysterious = m.stabilizer.trivial();
      m.explanation = m.mysterious ? "deep with trivial stabilizer" : "deep but stabilized";
      break;
    case DeepVerdict::Kind::DeepByStabilizer: m.explanation = "nontrivial stabilizer " + m.stabilizer.to_string(); break;
    case DeepVerdict::Kind::InTorus: m.explanation = "lies in a cluster torus"; break;
    default: m.explanation = "undecided: " + m.verdict.reason; break;
  }
  return m;
}

Star3Report star3_classify(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw InputError("star weights must be positive");
  Star3Report r;
  IceQuiver q = star3_quiver(a, b);
  // Point on {x1 = x1' = 0}: x2, x3 given, 1bar solves M1 + M2 = 0.
  auto locus_point = [&](const Rational& x2, const Rational& x3, const Rational& f2, const Rational& f3) {
    Rational m = 1;
    for (std::int64_t t = 0; t < b; ++t) m *= x2;
    for (std::int64_t t = 0; t < a; ++t) m *= x3;
    Rational f1 = -1 / m;
    return sample_stratum_point(q, {0}, {0, x2, x3, f1, f2, f3}, {0});
  };

  if (std::min(a, b) == 1) {
    r.branch = "min=1";
    const int via = a == 1 ? 2 : 1;
    r.witness = two_step_witness(q, {}, via, 0);
    r.cover_word = {via, 0};
    auto check = verify_witness(q, *r.witness);
    r.checks.push_back("identity " + r.witness->to_string(q.n(), q.m()) + ": " + check.message);
    bool ok = check.ok;
    const std::vector<std::pair<int, int>> samples{{1, 1}, {2, 1}, {-1, 3}, {3, -2}};
    for (auto [x2, x3] : samples) {
      ModelPoint pt = locus_point(x2, x3, 1, 2);
      Membership mem = torus_membership(q, pt, r.cover_word, {*r.witness});
      ok = ok && mem == Membership::In;
      r.checks.push_back("x2=" + std::to_string(x2) + ", x3=" + std::to_string(x3) + ": " + to_string(mem));
    }
    r.evidence_ok = ok;
    return r;
  }

  ModelPoint p1 = locus_point(1, 1, 1, 1);
  if (std::gcd(a, b) > 1) {
    r.branch = "gcd>1";
    bool ok = true;
    auto e1 = nontrivial_stabilizer_element(q, p1);
    ok = ok && e1.has_value() && e1->kind == StabilizerElement::Kind::Torsion &&
         e1->element_order() == std::gcd(a, b);
    if (e1) r.elements.push_back(*e1);
    r.checks.push_back("stratum {1}: stabilizer " + stabilizer(q, p1).to_string());
    // {x2 = x3 = 0} with vanishing x2', x3'.
    ModelPoint p23 = sample_stratum_point(q, {1, 2}, {1, 0, 0, 1, -1, -1}, {0, 0});
    auto e23 = nontrivial_stabilizer_element(q, p23);
    ok = ok && e23.has_value();
    if (e23) r.elements.push_back(*e23);
    r.checks.push_back("stratum {2,3}: stabilizer " + stabilizer(q, p23).to_string());
    r.evidence_ok = ok;
    return r;
  }

  r.branch = "coprime";
  r.has_mysterious = true;
  MysteryVerdict mv = is_mysterious(q, p1, CertKind::GcdStar);
  r.mysterious_point = p1;
  r.checks.push_back("stratum {1} point: " + to_string(mv.verdict.kind) + ", stabilizer " + mv.stabilizer.to_string());
  r.evidence_ok = mv.mysterious;
  return r;
}

}  // namespace clusterdeep
