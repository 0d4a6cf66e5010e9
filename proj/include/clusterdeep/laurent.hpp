#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace clusterdeep {

using Rational = mpq_class;
using Exponent = std::vector<std::int32_t>;

// Parses "a", "-a" or "a/b" into a reduced rational. Throws InputError.
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);

// Maximum number of terms any intermediate Laurent polynomial may hold.
// Default 10^6; overridden by the CLUSTERDEEP_TERM_GUARD environment variable.
std::size_t term_guard();
void set_term_guard(std::size_t cap);

// Sparse Laurent polynomial with integer coefficients. Terms are kept in lex
// order of exponent vectors; zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(int nvars) : nvars_(nvars) {}

  static LaurentPoly constant(int nvars, const mpz_class& c);
  static LaurentPoly variable(int nvars, int i, std::int32_t power = 1);
  static LaurentPoly monomial(int nvars, Exponent e, const mpz_class& c = 1);

  int nvars() const noexcept { return nvars_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  const std::map<Exponent, mpz_class>& terms() const noexcept { return terms_; }

  void add_term(const Exponent& e, const mpz_class& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
    return a.terms_ < b.terms_;
  }

  // Smallest exponent of variable i over all terms (0 for the zero poly).
  std::int32_t min_exponent(int i) const;
  std::int32_t max_exponent(int i) const;

  // True if no variable appears with a negative exponent.
  bool is_polynomial() const;

  // Text form "c * x1^a1 * x2^a2 + ...", deterministic term order. Variable
  // names default to x1..xN.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void check_vars(const LaurentPoly& o) const;
  int nvars_ = 0;
  std::map<Exponent, mpz_class> terms_;
};

LaurentPoly pow(const LaurentPoly& a, unsigned k);

// q with q * b == a. Throws NotDivisible when no Laurent quotient exists.
LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);

// Exact value at v. Throws ZeroAtNegativeExponent if a variable with a
// negative exponent is zero.
Rational evaluate(const LaurentPoly& a, const std::vector<Rational>& v);

// Same, with possibly unknown inputs. Returns nullopt when the value depends
// on an unknown input.
std::optional<Rational> evaluate_partial(const LaurentPoly& a,
                                         const std::vector<std::optional<Rational>>& v);

// Substitutes subs[i] for variable i. Negative exponents are only allowed on
// variables whose substitute is a monomial.
LaurentPoly compose(const LaurentPoly& a, const std::vector<LaurentPoly>& subs);

}  // namespace clusterdeep
