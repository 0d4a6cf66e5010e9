#include "doctest.h"

#include <cstdlib>
#include <random>

#include "clusterdeep/errors.hpp"
#include "clusterdeep/laurent.hpp"

using namespace clusterdeep;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng, int nvars, int terms) {
  std::uniform_int_distribution<int> e(-2, 3), c(-5, 5);
  LaurentPoly p(nvars);
  for (int t = 0; t < terms; ++t) {
    Exponent x(nvars);
    for (auto& v : x) v = e(rng);
    p.add_term(x, c(rng));
  }
  return p;
}

std::vector<Rational> random_point(std::mt19937_64& rng, int nvars) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
  std::vector<Rational> v;
  for (int i = 0; i < nvars; ++i) {
    int a = 0;
    while (a == 0) a = num(rng);
    v.emplace_back(a, den(rng));
    v.back().canonicalize();
  }
  return v;
}

}  // namespace

TEST_CASE("ring operations commute with evaluation") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    LaurentPoly a = random_poly(rng, 3, 4), b = random_poly(rng, 3, 3);
    auto v = random_point(rng, 3);
    CHECK(evaluate(a + b, v) == evaluate(a, v) + evaluate(b, v));
    CHECK(evaluate(a - b, v) == evaluate(a, v) - evaluate(b, v));
    CHECK(evaluate(a * b, v) == evaluate(a, v) * evaluate(b, v));
    CHECK(evaluate(pow(a, 3), v) == evaluate(a, v) * evaluate(a, v) * evaluate(a, v));
  }
}

TEST_CASE("exact division recovers the factor") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 100; ++t) {
    LaurentPoly a = random_poly(rng, 3, 3), b = random_poly(rng, 3, 3);
    if (b.is_zero()) continue;
    CHECK(div_exact(a * b, b) == a);
  }
  const int n = 2;
  LaurentPoly x1 = LaurentPoly::variable(n, 0), x2 = LaurentPoly::variable(n, 1), one = LaurentPoly::constant(n, 1);
  CHECK_THROWS_AS(div_exact(x1 + one, x2 + one), NotDivisible);
  CHECK(div_exact(x1 * x1 - one, x1 - one) == x1 + one);
  // Monomial divisors always divide in the Laurent ring.
  CHECK(div_exact(x1 + one, x2) * x2 == x1 + one);
}

TEST_CASE("evaluation of the A2 variable at (-1, -1)") {
  const int n = 2;
  LaurentPoly x1 = LaurentPoly::variable(n, 0), x2 = LaurentPoly::variable(n, 1);
  LaurentPoly x = div_exact(LaurentPoly::constant(n, 1) + x1 + x2, x1 * x2);
  CHECK(evaluate(x, {Rational(-1), Rational(-1)}) == -1);
  CHECK_THROWS_AS(evaluate(x, {Rational(0), Rational(-1)}), ZeroAtNegativeExponent);
  CHECK(x.to_string() == "x2^-1 + x1^-1 + x1^-1*x2^-1");
}

TEST_CASE("partial evaluation is undetermined only when it must be") {
  const int n = 2;
  LaurentPoly x1 = LaurentPoly::variable(n, 0), x2 = LaurentPoly::variable(n, 1);
  CHECK(evaluate_partial(x1 * x2, {Rational(0), std::nullopt}) == Rational(0));
  CHECK_FALSE(evaluate_partial(x1 + x2, {Rational(0), std::nullopt}).has_value());
  CHECK(evaluate_partial(x1 + x2, {Rational(2), Rational(3)}) == Rational(5));
}

TEST_CASE("composition substitutes variables") {
  const int n = 2;
  LaurentPoly x1 = LaurentPoly::variable(n, 0), x2 = LaurentPoly::variable(n, 1), one = LaurentPoly::constant(n, 1);
  LaurentPoly p = x1 * x1 + x2;
  CHECK(compose(p, {x2, x1 + one}) == x2 * x2 + x1 + one);
  LaurentPoly q = LaurentPoly::variable(n, 0, -1);
  CHECK_THROWS(compose(q, {x1 + one, x2}));
}

TEST_CASE("rationals parse and print canonically") {
  CHECK(to_string(parse_rational("-4/6")) == "-2/3");
  CHECK(to_string(parse_rational("5")) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
}

TEST_CASE("term guard caps intermediate size") {
  const std::size_t saved = term_guard();
  set_term_guard(10);
  const int n = 2;
  LaurentPoly s = LaurentPoly::constant(n, 1) + LaurentPoly::variable(n, 0) + LaurentPoly::variable(n, 1);
  CHECK_THROWS_AS(pow(s, 5), ResourceCap);
  set_term_guard(saved);
  CHECK(pow(s, 5).size() == 21);
}
