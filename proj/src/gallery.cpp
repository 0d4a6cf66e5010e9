#include "clusterdeep/gallery.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "clusterdeep/families.hpp"
#include "clusterdeep/mutation_graph.hpp"

namespace clusterdeep {

namespace {

using Kind = DeepVerdict::Kind;

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

ModelPoint point(std::initializer_list<long> p, std::initializer_list<long> pp, std::initializer_list<long> f) {
  return ModelPoint{ints(p), ints(pp), ints(f)};
}

std::string power(const std::string& name, std::int64_t e) {
  return "t" + name + (e == 1 ? "" : "^" + std::to_string(e));
}

std::set<std::string> rendered_equations(const IceQuiver& q, const std::vector<std::string>& names) {
  std::set<std::string> out;
  for (const auto& c : dilation_group(q).equations) out.insert(render_constraint(c, names));
  return out;
}

json string_set(const std::set<std::string>& s) { return json(std::vector<std::string>(s.begin(), s.end())); }

GalleryOutcome a2_five_tori() {
  IceQuiver q = a2_quiver();
  ExplorationReport seeds = explore_seeds(q, 10, 100);
  const std::vector<MutationWord> words{{}, {0}, {1}, {0, 1}, {1, 0}};
  const std::vector<ModelPoint> points{point({-1, -1}, {0, 0}, {}), point({0, -1}, {-1, -1}, {}),
                                       point({-1, 0}, {-1, -1}, {}), point({-1, 0}, {-1, 0}, {}),
                                       point({0, -1}, {0, -1}, {})};
  bool ok = seeds.nodes.size() == 5 && seeds.frontier_exhausted;
  json matrix = json::array();
  for (const auto& pt : points) {
    require_valid(q, pt);
    json row = json::array();
    for (std::size_t s = 0; s < words.size(); ++s) {
      Membership m = derived_membership(q, pt, words[s]);
      row.push_back(m == Membership::In ? 1 : m == Membership::Out ? 0 : -1);
    }
    matrix.push_back(row);
  }
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t s = 0; s < 5; ++s) ok = ok && matrix[r][s] == (r == s ? 1 : 0);
  return {ok, {{"seeds", seeds.nodes.size()}, {"membership", matrix}}};
}

GalleryOutcome dilation_star() {
  IceQuiver q = star_quiver(2, 3);
  auto eqs = rendered_equations(q, {});
  DilationGroup d = dilation_group(q);
  const std::set<std::string> expected{"t1^2 = 1", "t2^3 t3^2 = 1", "t1^3 = 1"};
  bool ok = eqs == expected && d.group.torus_rank == 1 && d.group.torsion.empty();
  return {ok, {{"equations", string_set(eqs)}, {"group", to_json(d.group)}}};
}

GalleryOutcome dilation_rank2() {
  bool ok = true;
  json detail = json::array();
  for (std::int64_t a : {1, 2, 3, 5}) {
    auto eqs = rendered_equations(rank2_quiver(a), {"1", "2", "1bar", "2bar"});
    const std::set<std::string> expected{power("1", a) + " t2bar = 1", power("2", a) + " t1bar = 1"};
    ok = ok && eqs == expected;
    detail.push_back({{"a", a}, {"equations", string_set(eqs)}});
  }
  return {ok, detail};
}

GalleryOutcome dilation_star3() {
  bool ok = true;
  json detail = json::array();
  const std::vector<std::string> names{"1", "2", "3", "1bar", "2bar", "3bar"};
  for (auto [a, b] : std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 5}, {2, 4}, {2, 3}, {3, 5}}) {
    auto eqs = rendered_equations(star3_quiver(a, b), names);
    // Factors print in vertex order.
    const std::set<std::string> expected{power("1", a) + " t3bar = 1",
                                         power("2", b) + " " + power("3", a) + " t1bar = 1",
                                         power("1", b) + " t2bar = 1"};
    ok = ok && eqs == expected;
    detail.push_back({{"a", a}, {"b", b}, {"equations", string_set(eqs)}});
  }
  return {ok, detail};
}

GalleryOutcome star_mysterious() {
  IceQuiver q = star_quiver(2, 3);
  ModelPoint pt = point({0, -1, 1}, {0, -1, 1}, {});
  require_valid(q, pt);
  MysteryVerdict v = is_mysterious(q, pt);
  bool ok = v.mysterious && v.stabilizer.trivial() && v.verdict.kind == Kind::Deep && v.verdict.certificate &&
            v.verdict.certificate->kind == CertKind::GcdStar;
  return {ok, to_json(v, q)};
}

GalleryOutcome star_freeze() {
  IceQuiver q = star_quiver(2, 3);
  ModelPoint pt = point({0, -1, 1}, {0, -1, 1}, {});
  bool ok = stabilizer(q, pt).trivial();
  json detail = json::object();
  for (int k : {1, 2}) {
    IceQuiver fq = freeze_vertex(q, k);
    GroupStructure g = stabilizer(fq, freeze_point(q, pt, k));
    ok = ok && !g.trivial();
    detail["freeze " + std::to_string(k + 1)] = to_json(g);
  }
  return {ok, detail};
}

GalleryOutcome star3_trichotomy() {
  Star3Report r15 = star3_classify(1, 5);
  Star3Report r24 = star3_classify(2, 4);
  Star3Report r23 = star3_classify(2, 3);

  // x''_1 x3 = x'_1 + x3bar in the initial chart: variables x1..x6, then x1'..x3'.
  bool witness_ok = false;
  if (r15.witness) {
    const int nv = 9;
    LaurentPoly rhs = LaurentPoly::variable(nv, 6) + LaurentPoly::variable(nv, 5);
    witness_ok = r15.witness->numerator * LaurentPoly::variable(nv, 2) == r15.witness->denominator * rhs &&
                 verify_witness(star3_quiver(1, 5), *r15.witness).ok;
  }
  bool order2 = std::any_of(r24.elements.begin(), r24.elements.end(), [](const StabilizerElement& e) {
    return e.kind == StabilizerElement::Kind::Torsion && e.element_order() == 2;
  });
  bool ok = !r15.has_mysterious && r15.evidence_ok && witness_ok && r15.cover_word == MutationWord{2, 0} &&
            !r24.has_mysterious && r24.evidence_ok && order2 && r23.has_mysterious && r23.evidence_ok;
  return {ok, {{"(1,5)", to_json(r15)}, {"(2,4)", to_json(r24)}, {"(2,3)", to_json(r23)}}};
}

GalleryOutcome rank2_cases() {
  bool ok = true;
  json detail = json::array();
  for (std::int64_t a : {1, 2, 3}) {
    IceQuiver q = rank2_quiver(a);
    Rational f2 = -1;  // x1^a x2bar + 1 = 0 at x1 = 1
    struct Case {
      std::string name;
      ModelPoint pt;
      Kind expected;
    };
    std::vector<Case> cases{
        {"empty stratum", sample_stratum_point(q, {}, ints({1, 2, 1, 1}), {}), Kind::InTorus},
        {"x2 = 0, x2' != 0", sample_stratum_point(q, {1}, {1, 0, 1, f2}, ints({3})), Kind::InTorus},
        {"x2 = x2' = 0", sample_stratum_point(q, {1}, {1, 0, 1, f2}, ints({0})),
         a >= 2 ? Kind::DeepByStabilizer : Kind::InTorus},
    };
    for (const auto& c : cases) {
      DeepVerdict v = rank2_classify(a, c.pt);
      DeepVerdict g = deep_check(q, c.pt);
      bool good = v.kind == c.expected && g.kind == c.expected;
      if (c.expected == Kind::DeepByStabilizer)
        good = good && v.element && v.element->element_order() == a && v.element->exponents[1] != 0;
      if (c.expected == Kind::InTorus)
        good = good && torus_membership(q, c.pt, v.word, v.witnesses) == Membership::In;
      ok = ok && good;
      detail.push_back({{"a", a}, {"case", c.name}, {"verdict", to_string(v.kind)}, {"word", word_to_json(v.word)}});
    }
  }
  return {ok, detail};
}

GalleryOutcome key_triangle_point() {
  IceQuiver q = key_triangle(3, 2);
  ModelPoint pt = sample_stratum_point(q, {0}, ints({0, -1, 1}), ints({0}));
  MysteryVerdict v = is_mysterious(q, pt, CertKind::Key);
  bool ok = v.mysterious && v.verdict.certificate && v.verdict.certificate->kind == CertKind::Key;
  json d = to_json(v, q);
  d["strict_key"] = is_key(q, KeyMode::Strict).has_value();
  d["tolerant_key"] = is_key(q, KeyMode::TranspositionTolerant).has_value();
  return {ok, d};
}

GalleryOutcome abundant_square_point() {
  IceQuiver q = abundant_square(3, 2, 2, 2, 2, 2);
  ModelPoint pt = sample_stratum_point(q, {0}, ints({0, 1, 1, -1}), ints({0}));
  MysteryVerdict v = is_mysterious(q, pt, CertKind::AbundantAcyclic);
  bool ok = v.mysterious && v.verdict.certificate && v.verdict.certificate->kind == CertKind::AbundantAcyclic;
  return {ok, to_json(v, q)};
}

GalleryOutcome abundant_triangle_points() {
  IceQuiver q = abundant_triangle(2, 3, 5);
  // One point on each locus {x_i = x_i' = 0}.
  const std::vector<std::pair<int, std::vector<Rational>>> loci{
      {0, ints({0, 1, -1})}, {1, ints({-1, 0, -1})}, {2, ints({-1, 1, 0})}};
  bool ok = true;
  json detail = json::array();
  for (const auto& [i, vals] : loci) {
    ModelPoint pt = sample_stratum_point(q, {i}, vals, ints({0}));
    MysteryVerdict v = is_mysterious(q, pt, CertKind::AbundantAcyclic);
    ok = ok && v.mysterious;
    detail.push_back({{"vertex", i + 1}, {"point", to_json(pt)}, {"verdict", to_json(v, q)}});
  }
  return {ok, detail};
}

GalleryOutcome fork_triangle() {
  IceQuiver q = cyclic_triangle(3, 4, 5);
  auto ret = is_fork(q);
  ForklessResult f = forkless_part(q, 10000, Dedup::Labeled);
  ExplorationReport r = explore_quivers(q, 5, 100000, Dedup::Labeled);
  bool all_abundant = std::all_of(r.nodes.begin(), r.nodes.end(), [](const IceQuiver& x) { return is_abundant(x); });
  bool ok = ret.has_value() && f.complete && f.members.empty() && all_abundant;
  return {ok,
          {{"point_of_return", ret ? *ret + 1 : 0},
           {"forkless_size", f.members.size()},
           {"explored", r.nodes.size()},
           {"all_abundant", all_abundant}}};
}

GalleryOutcome locally_acyclic_record() {
  IceQuiver q = locally_acyclic_quiver(2, 2, 2, 2, 2, 2);
  std::string reason;
  auto cert = cert_fork_bounded(q, 10000, &reason);
  json d = {{"quiver", to_json(q)}, {"fork_bounded", cert.has_value()}};
  if (cert) d["certificate"] = to_json(*cert);
  else d["reason"] = reason;
  return {true, d};
}

GalleryOutcome tree_cover_paths() {
  bool ok = true;
  json detail = json::array();
  std::mt19937_64 rng(7);
  for (int n : {2, 3, 4}) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    IceQuiver q = reduced_tree(n, edges);
    int in = 0, deep = 0;
    for (const auto& I : independent_sets(q)) {
      auto pt = random_stratum_point(q, I, rng);
      if (!pt) return {false, {{"error", "no solver frozen vertex"}}};
      TreeCoverResult r = tree_cover(q, *pt);
      CoverCheck c = verify_cover(q, *pt, r);
      bool trivial = stabilizer(q, *pt).trivial();
      ok = ok && c.ok && r.in_torus == trivial;
      (r.in_torus ? in : deep)++;
    }
    detail.push_back({{"n", n}, {"in_torus", in}, {"deep_by_stabilizer", deep}});
  }
  return {ok, detail};
}

}  // namespace

Membership derived_membership(const IceQuiver& q, const ModelPoint& pt, const MutationWord& word) {
  require_valid(q, pt);
  std::vector<Chart> history{initial_chart(q, pt)};
  std::vector<Witness> derived;
  StepOptions opt;
  opt.witnesses = &derived;
  opt.derived = &derived;
  for (int k : word) chart_step(history, k, opt);
  return torus_membership(q, pt, word, derived);
}

const std::vector<GalleryEntry>& gallery_entries() {
  static const std::vector<GalleryEntry> entries{
      {"a2-five-tori", "A2: five seeds, one point private to each torus", "worked example", a2_five_tori},
      {"star-2-3-dilation", "dilation equations of the (2,3) star", "worked example", dilation_star},
      {"rank2-dilation", "dilation equations of the rank-2 family", "worked example", dilation_rank2},
      {"star3-dilation", "dilation equations of the star with companion frozens", "worked example",
       dilation_star3},
      {"star-2-3-mysterious", "mysterious point of the (2,3) star", "worked example", star_mysterious},
      {"star-2-3-freeze", "freezing 2 or 3 gives the point a stabilizer", "worked example", star_freeze},
      {"star3-trichotomy", "star with companion frozens: (1,5), (2,4), (2,3)", "worked example", star3_trichotomy},
      {"rank2-cases", "rank-2 case split", "worked example", rank2_cases},
      {"key-triangle-3-2", "key triangle locus x2^3 + x3^2 = 0", "derived", key_triangle_point},
      {"abundant-square", "abundant square locus x4^a + x2^b x3^e = 0", "derived", abundant_square_point},
      {"abundant-triangle", "abundant triangle, pairwise coprime weights", "derived", abundant_triangle_points},
      {"fork-triangle-3-4-5", "oriented (3,4,5) triangle: every mutation is a fork", "worked example",
       fork_triangle},
      {"locally-acyclic-record", "fork-bounded certificate on the locally acyclic family", "record",
       locally_acyclic_record},
      {"tree-cover-paths", "tree cover on reduced paths, every stratum", "derived", tree_cover_paths},
  };
  return entries;
}

GalleryReport run_gallery(const std::string& filter) {
  GalleryReport rep;
  rep.results = json::array();
  for (const auto& e : gallery_entries()) {
    if (!filter.empty() && e.id.find(filter) == std::string::npos) continue;
    GalleryOutcome o;
    try {
      o = e.run();
    } catch (const Error& err) {
      o = {false, error_json(err)};
    } catch (const std::exception& err) {
      o = {false, {{"code", "InternalError"}, {"message", err.what()}}};
    }
    rep.all_passed = rep.all_passed && o.passed;
    rep.results.push_back(
        {{"id", e.id}, {"topic", e.topic}, {"basis", e.basis}, {"passed", o.passed}, {"detail", o.detail}});
  }
  return rep;
}

}  // namespace clusterdeep
