#include "doctest.h"

#include <random>
#include <set>

#include "clusterdeep/dilation.hpp"
#include "clusterdeep/errors.hpp"
#include "clusterdeep/families.hpp"
#include "clusterdeep/smith.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace clusterdeep;

namespace {

IntMatrix to_int_matrix(const oracle::Mat& a) {
  IntMatrix m(static_cast<int>(a.size()), a.empty() ? 0 : static_cast<int>(a[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = a[i][j];
  return m;
}

std::vector<long> as_longs(const std::vector<mpz_class>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

bool is_diagonal_chain(const IntMatrix& D) {
  mpz_class prev = 1;
  for (int i = 0; i < D.rows(); ++i)
    for (int j = 0; j < D.cols(); ++j) {
      if (i != j && D(i, j) != 0) return false;
    }
  for (int i = 0; i < std::min(D.rows(), D.cols()); ++i) {
    if (D(i, i) < 0) return false;
    if (D(i, i) != 0 && prev == 0) return false;
    if (prev != 0 && D(i, i) % prev != 0) return false;
    prev = D(i, i);
  }
  return true;
}

}  // namespace

TEST_CASE("Smith form matches determinantal divisors on every 2x2 matrix with entries in [-2, 2]") {
  for (int code = 0; code < 625; ++code) {
    int c = code;
    oracle::Mat a(2, std::vector<long>(2));
    for (auto& row : a)
      for (auto& x : row) {
        x = c % 5 - 2;
        c /= 5;
      }
    IntMatrix m = to_int_matrix(a);
    SmithForm s = smith_normal_form(m);
    REQUIRE(as_longs(invariant_factors(m)) == oracle::invariant_factors(a));
    CHECK(s.U * m * s.V == s.D);
    CHECK(is_diagonal_chain(s.D));
  }
}

TEST_CASE("Smith form on random rectangular matrices") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> e(-6, 6), dim(1, 4);
  for (int t = 0; t < 300; ++t) {
    oracle::Mat a(dim(rng), std::vector<long>(dim(rng)));
    for (auto& row : a)
      for (auto& x : row) x = e(rng);
    IntMatrix m = to_int_matrix(a);
    SmithForm s = smith_normal_form(m);
    CHECK(as_longs(invariant_factors(m)) == oracle::invariant_factors(a));
    CHECK(s.U * m * s.V == s.D);
    CHECK(determinant(s.U) * determinant(s.U) == 1);
    CHECK(determinant(s.V) * determinant(s.V) == 1);
  }
}

TEST_CASE("unimodular inverse") {
  IntMatrix m(2, 2);
  m(0, 0) = 2;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = 1;
  CHECK(m * unimodular_inverse(m) == IntMatrix::identity(2));
  m(1, 1) = 2;
  CHECK_THROWS_AS(unimodular_inverse(m), InputError);
}

TEST_CASE("group structure counts mu_N points like brute force") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> e(-3, 3), rows(0, 3), cols(1, 3);
  for (int t = 0; t < 200; ++t) {
    const int k = cols(rng);
    std::vector<CharacterConstraint> cs(rows(rng), CharacterConstraint(k));
    for (auto& c : cs)
      for (auto& x : c) x = e(rng);
    GroupStructure g = group_of(cs, k);
    for (long N : {2L, 3L, 4L, 6L}) {
      mpz_class expected = 1;
      for (int r = 0; r < g.torus_rank; ++r) expected *= N;
      for (const auto& d : g.torsion) expected *= gcd(d, mpz_class(N));
      CHECK(expected == oracle::count_mu_n_solutions(cs, k, N));
    }
  }
}

TEST_CASE("generators satisfy their constraints") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> e(-4, 4);
  for (int t = 0; t < 100; ++t) {
    std::vector<CharacterConstraint> cs(2, CharacterConstraint(3));
    for (auto& c : cs)
      for (auto& x : c) x = e(rng);
    GroupStructure g = group_of(cs, 3);
    int torsion = 0, free = 0;
    for (const auto& gen : group_generators(cs, 3)) {
      CHECK(satisfies(gen, cs));
      if (gen.kind == StabilizerElement::Kind::OneParameter) ++free;
      else if (gen.element_order() > 1) ++torsion;
    }
    CHECK(free == g.torus_rank);
    CHECK(torsion == static_cast<int>(g.torsion.size()));
  }
}

TEST_CASE("dilation group of the (2,3) star") {
  DilationGroup d = dilation_group(star_quiver(2, 3));
  std::set<std::string> eqs;
  for (const auto& c : d.equations) eqs.insert(render_constraint(c));
  CHECK(eqs == std::set<std::string>{"t1^2 = 1", "t2^3 t3^2 = 1", "t1^3 = 1"});
  CHECK(d.group.torus_rank == 1);
  CHECK(d.group.torsion.empty());
  CHECK(d.group.to_string() == "(C*)^1");
}

TEST_CASE("stabilizers on the (2,3) star") {
  IceQuiver q = star_quiver(2, 3);
  CHECK(stabilizer(q, test::point({0, -1, 1}, {0, -1, 1})).trivial());
  CHECK(stabilizer(q, test::point({1, 1, 1}, {2, 2, 2})).trivial());
  // Zero x2, x3 and every x' leave t1 = 1 and t2^3 t3^2 = 1.
  GroupStructure g = stabilizer(q, test::point({-2, 0, 0}, {0, 0, 0}));
  CHECK(g.torus_rank == 1);
}

TEST_CASE("x' character") {
  CHECK(xprime_character(star_quiver(2, 3), 0) == CharacterConstraint{-1, 3, 2});
  CHECK(xprime_character(star_quiver(2, 3), 1) == CharacterConstraint{0, -1, 0});
}

TEST_CASE("freezing moves the row to the end") {
  IceQuiver q = star_quiver(2, 3);
  IceQuiver f = freeze_vertex(q, 1);
  CHECK(f.n() == 2);
  CHECK(f.m() == 1);
  CHECK(f.b(2, 0) == 3);  // old vertex 2 -> old vertex 1 with weight 3
  CHECK(freeze_relabeling(q, 1) == std::vector<int>{0, 2, 1});
}

TEST_CASE("rendered constraints put negative exponents on the right") {
  CHECK(render_constraint({2, -1, 0}) == "t1^2 = t2");
  CHECK(render_constraint({0, 0, 0}) == "1 = 1");
  CHECK(render_constraint({1, 0, 1}, {"1", "2", "1bar"}) == "t1 t1bar = 1");
}
