#include "doctest.h"

#include <algorithm>

#include "clusterdeep/deep.hpp"
#include "clusterdeep/errors.hpp"
#include "clusterdeep/families.hpp"
#include "support.hpp"

using namespace clusterdeep;
using test::ints;
using test::point;
using Kind = DeepVerdict::Kind;

TEST_CASE("gcd-star certificate") {
  auto c = cert_gcd_star(star_quiver(2, 3));
  REQUIRE(c.has_value());
  CHECK(c->kind == CertKind::GcdStar);
  CHECK_FALSE(cert_gcd_star(star_quiver(2, 4)).has_value());  // gcd 2
  CHECK_FALSE(cert_gcd_star(star_quiver(1, 3)).has_value());  // a weight 1
  CHECK_THROWS_AS(cert_gcd_star(a2_quiver()), WrongShape);
  CHECK_FALSE(find_certificate(a2_quiver(), CertKind::GcdStar).has_value());
}

TEST_CASE("other certificates") {
  CHECK(cert_key(star_quiver(2, 3)).has_value());
  CHECK(cert_key(key_triangle(3, 2)).has_value());
  CHECK(cert_abundant_acyclic(abundant_square(3, 2, 2, 2, 2, 2)).has_value());
  CHECK_FALSE(cert_abundant_acyclic(star_quiver(2, 3)).has_value());
  CHECK(cert_fork_bounded(abundant_triangle(2, 3, 5), 1000).has_value());
  std::string reason;
  CHECK_FALSE(cert_fork_bounded(a2_quiver(), 1000, &reason).has_value());
  CHECK_FALSE(reason.empty());
  CHECK(parse_cert_kind("fork") == CertKind::ForkBounded);
  CHECK_THROWS_AS(parse_cert_kind("nope"), InputError);
}

TEST_CASE("the (2,3) star point is mysterious") {
  IceQuiver q = star_quiver(2, 3);
  ModelPoint pt = point({0, -1, 1}, {0, -1, 1});
  MysteryVerdict v = is_mysterious(q, pt);
  CHECK(v.mysterious);
  CHECK(v.stabilizer.trivial());
  REQUIRE(v.verdict.certificate.has_value());
  CHECK(v.verdict.certificate->kind == CertKind::GcdStar);
}

TEST_CASE("a certificate never fires off its hypothesis") {
  IceQuiver q = star_quiver(2, 3);
  // x1 = 0 but x1' != 0: lies in the torus of mu_1.
  ModelPoint pt = sample_stratum_point(q, {0}, ints({0, -1, 1}), ints({5}));
  CHECK(so_may_deep(q, pt, CertKind::GcdStar).kind == Kind::Unknown);
  DeepVerdict v = deep_check(q, pt);
  CHECK(v.kind == Kind::InTorus);
  CHECK(torus_membership(q, pt, v.word, v.witnesses) == Membership::In);
}

TEST_CASE("adding frozen variables keeps the point mysterious") {
  IceQuiver q = star_quiver(2, 3);
  ModelPoint pt = point({0, -1, 1}, {0, -1, 1});
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> e(-3, 3), count(1, 3);
  for (int t = 0; t < 10; ++t) {
    std::vector<std::vector<std::int64_t>> rows(count(rng), std::vector<std::int64_t>(3));
    for (auto& r : rows)
      for (auto& x : r) x = e(rng);
    auto [lq, lp] = lift_with_frozens(q, pt, rows);
    CHECK(is_mysterious(lq, lp).mysterious);
  }
}

TEST_CASE("a stabilized point is deep by its stabilizer") {
  IceQuiver q = star_quiver(3, 6);
  ModelPoint pt = sample_stratum_point(q, {0}, ints({0, 1, -1}), ints({0}));
  DeepVerdict v = deep_check(q, pt);
  REQUIRE(v.kind == Kind::DeepByStabilizer);
  REQUIRE(v.element.has_value());
  CHECK(v.element->nontrivial());
  CHECK(satisfies(*v.element, stabilizer_constraints(q, pt)));
  CHECK_FALSE(is_mysterious(q, pt).mysterious);
}

TEST_CASE("rank-2 case split") {
  for (std::int64_t a : {1, 2, 4}) {
    IceQuiver q = rank2_quiver(a);
    ModelPoint deep = sample_stratum_point(q, {1}, ints({1, 0, 1, -1}), ints({0}));
    DeepVerdict v = rank2_classify(a, deep);
    if (a == 1) {
      REQUIRE(v.kind == Kind::InTorus);
      CHECK(torus_membership(q, deep, v.word, v.witnesses) == Membership::In);
    } else {
      REQUIRE(v.kind == Kind::DeepByStabilizer);
      CHECK(v.element->element_order() == a);
      CHECK(v.element->exponents == std::vector<mpz_class>{0, 1, 0, 0});
    }
    // The same point on the other side: x1 = x1' = 0.
    Rational f1 = -1;  // relation at 1: 1 + x2^a x1bar = 0 at x2 = 1
    ModelPoint other = sample_stratum_point(q, {0}, {0, 1, f1, 1}, ints({0}));
    CHECK(rank2_classify(a, other).kind == (a == 1 ? Kind::InTorus : Kind::DeepByStabilizer));
  }
}

TEST_CASE("trichotomy for the star with companion frozens") {
  Star3Report r15 = star3_classify(1, 5);
  CHECK(r15.branch == "min=1");
  CHECK_FALSE(r15.has_mysterious);
  CHECK(r15.evidence_ok);
  REQUIRE(r15.witness.has_value());
  CHECK(verify_witness(star3_quiver(1, 5), *r15.witness).ok);

  Star3Report r51 = star3_classify(5, 1);
  CHECK(r51.evidence_ok);
  CHECK(r51.cover_word == MutationWord{1, 0});

  Star3Report r24 = star3_classify(2, 4);
  CHECK(r24.branch == "gcd>1");
  CHECK(r24.evidence_ok);
  CHECK(std::any_of(r24.elements.begin(), r24.elements.end(),
                    [](const StabilizerElement& e) { return e.element_order() == 2; }));

  Star3Report r23 = star3_classify(2, 3);
  CHECK(r23.has_mysterious);
  CHECK(r23.evidence_ok);
  REQUIRE(r23.mysterious_point.has_value());
  CHECK(is_mysterious(star3_quiver(2, 3), *r23.mysterious_point).mysterious);
}

TEST_CASE("key square loci") {
  IceQuiver q = key_square(2, 2, 3, 2, 3);
  // Locus x1 = x1' = 0: x2^a x4^d x3^e + 1 = 0.
  ModelPoint p1 = sample_stratum_point(q, {0}, ints({0, 1, -1, 1}), ints({0}));
  MysteryVerdict v = is_mysterious(q, p1, CertKind::Key);
  CHECK(v.verdict.kind == Kind::Deep);
}

TEST_CASE("relabeling a point") {
  ModelPoint pt = point({0, 2, 3}, {4, 5, 6});
  ModelPoint r = relabel_point(pt, {2, 0, 1}, 3);
  CHECK(r.p == ints({2, 3, 0}));
  CHECK(r.p_prime == ints({5, 6, 4}));
}

TEST_CASE("generic points lie in the initial torus") {
  IceQuiver q = abundant_triangle(2, 3, 5);
  DeepVerdict v = deep_check(q, sample_stratum_point(q, {}, ints({1, 2, -1}), {}));
  CHECK(v.kind == Kind::InTorus);
  CHECK(v.word.empty());
}
