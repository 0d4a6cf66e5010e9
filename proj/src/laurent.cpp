#include "clusterdeep/laurent.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>

#include "clusterdeep/errors.hpp"

namespace clusterdeep {

namespace {

std::atomic<std::size_t>& guard_storage() {
  static std::atomic<std::size_t> cap = [] {
    std::size_t v = 1000000;
    if (const char* env = std::getenv("CLUSTERDEEP_TERM_GUARD")) {
      char* end = nullptr;
      unsigned long long parsed = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && parsed > 0) v = static_cast<std::size_t>(parsed);
    }
    return v;
  }();
  return cap;
}

void enforce_guard(std::size_t n) {
  if (n > term_guard())
    throw ResourceCap("Laurent polynomial exceeded the term guard (" + std::to_string(term_guard()) + " terms)");
}

Exponent add_exp(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

}  // namespace

std::size_t term_guard() { return guard_storage().load(); }
void set_term_guard(std::size_t cap) { guard_storage().store(cap); }

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw InputError("empty rational");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw InputError("malformed rational '" + s + "'");
  bool slash = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] == '/') {
      if (slash || i == start || i + 1 == s.size()) throw InputError("malformed rational '" + s + "'");
      slash = true;
    } else if (s[i] < '0' || s[i] > '9') {
      throw InputError("malformed rational '" + s + "'");
    }
  }
  std::string t = s[0] == '+' ? s.substr(1) : s;
  Rational r;
  if (r.set_str(t, 10) != 0) throw InputError("malformed rational '" + s + "'");
  if (r.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

LaurentPoly LaurentPoly::constant(int nvars, const mpz_class& c) {
  LaurentPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int i, std::int32_t power) {
  if (i < 0 || i >= nvars) throw InputError("variable index out of range");
  Exponent e(nvars, 0);
  e[i] = power;
  return monomial(nvars, std::move(e));
}

LaurentPoly LaurentPoly::monomial(int nvars, Exponent e, const mpz_class& c) {
  if (static_cast<int>(e.size()) != nvars) throw InputError("exponent length mismatch");
  LaurentPoly p(nvars);
  p.add_term(e, c);
  return p;
}

void LaurentPoly::add_term(const Exponent& e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_vars(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_) throw InputError("Laurent polynomials have different variable counts");
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  enforce_guard(terms_.size());
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  enforce_guard(terms_.size());
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_vars(b);
  LaurentPoly r(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(add_exp(ea, eb), ca * cb);
    enforce_guard(r.terms_.size());
  }
  return r;
}

std::int32_t LaurentPoly::min_exponent(int i) const {
  if (terms_.empty()) return 0;
  std::int32_t m = terms_.begin()->first[i];
  for (const auto& [e, c] : terms_) m = std::min(m, e[i]);
  return m;
}

std::int32_t LaurentPoly::max_exponent(int i) const {
  if (terms_.empty()) return 0;
  std::int32_t m = terms_.begin()->first[i];
  for (const auto& [e, c] : terms_) m = std::max(m, e[i]);
  return m;
}

bool LaurentPoly::is_polynomial() const {
  for (const auto& [e, c] : terms_)
    for (auto x : e)
      if (x < 0) return false;
  return true;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // descending lex order reads more naturally
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = true;
    for (auto x : e)
      if (x != 0) constant = false;
    bool wrote = false;
    if (constant || mag != 1) {
      os << mag.get_str();
      wrote = true;
    }
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << (i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i + 1));
      if (e[i] != 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

LaurentPoly pow(const LaurentPoly& a, unsigned k) {
  LaurentPoly result = LaurentPoly::constant(a.nvars(), 1);
  LaurentPoly base = a;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars()) throw InputError("Laurent polynomials have different variable counts");
  if (b.is_zero()) throw InputError("division by the zero polynomial");
  const int n = a.nvars();
  LaurentPoly q(n);
  if (a.is_zero()) return q;
  if (b.is_monomial()) {
    const auto& [eb, cb] = *b.terms().begin();
    for (const auto& [ea, ca] : a.terms()) {
      if (ca % cb != 0) throw NotDivisible("coefficient not divisible");
      Exponent e(n);
      for (int i = 0; i < n; ++i) e[i] = ea[i] - eb[i];
      q.add_term(e, mpz_class(ca / cb));
    }
    return q;
  }
  // Quotient exponents are confined to the box spanned by the difference of
  // the Newton boxes; leaving it proves non-divisibility.
  std::vector<std::int32_t> lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    lo[i] = a.min_exponent(i) - b.min_exponent(i);
    hi[i] = a.max_exponent(i) - b.max_exponent(i);
    if (lo[i] > hi[i]) throw NotDivisible("Newton boxes incompatible");
  }
  const auto& [lb_e, lb_c] = *b.terms().rbegin();
  LaurentPoly r = a;
  while (!r.is_zero()) {
    const auto& [lr_e, lr_c] = *r.terms().rbegin();
    if (lr_c % lb_c != 0) throw NotDivisible("leading coefficient not divisible");
    Exponent e(n);
    for (int i = 0; i < n; ++i) {
      e[i] = lr_e[i] - lb_e[i];
      if (e[i] < lo[i] || e[i] > hi[i]) throw NotDivisible("quotient term leaves the Newton box");
    }
    LaurentPoly t = LaurentPoly::monomial(n, e, mpz_class(lr_c / lb_c));
    q += t;
    r -= t * b;
  }
  return q;
}

namespace {

Rational rational_pow(const Rational& x, std::int32_t k) {
  Rational r = 1;
  Rational base = k < 0 ? Rational(1) / x : x;
  unsigned long m = static_cast<unsigned long>(k < 0 ? -static_cast<long>(k) : k);
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), m);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), m);
  r.canonicalize();
  return r;
}

}  // namespace

Rational evaluate(const LaurentPoly& a, const std::vector<Rational>& v) {
  std::vector<std::optional<Rational>> ov(v.begin(), v.end());
  auto r = evaluate_partial(a, ov);
  return *r;
}

std::optional<Rational> evaluate_partial(const LaurentPoly& a,
                                         const std::vector<std::optional<Rational>>& v) {
  if (static_cast<int>(v.size()) != a.nvars()) throw InputError("evaluation point has wrong length");
  for (const auto& [e, c] : a.terms())
    for (int i = 0; i < a.nvars(); ++i)
      if (e[i] < 0 && v[i] && *v[i] == 0)
        throw ZeroAtNegativeExponent("variable x" + std::to_string(i + 1) +
                                     " is zero but appears with a negative exponent");
  Rational sum = 0;
  for (const auto& [e, c] : a.terms()) {
    bool zero = false, unknown = false;
    for (int i = 0; i < a.nvars(); ++i) {
      if (e[i] == 0) continue;
      if (!v[i]) unknown = true;
      else if (*v[i] == 0) zero = true;
    }
    if (zero) continue;
    if (unknown) return std::nullopt;
    Rational term(c);
    for (int i = 0; i < a.nvars(); ++i)
      if (e[i] != 0) term *= rational_pow(*v[i], e[i]);
    sum += term;
  }
  return sum;
}

LaurentPoly compose(const LaurentPoly& a, const std::vector<LaurentPoly>& subs) {
  if (static_cast<int>(subs.size()) != a.nvars()) throw InputError("substitution has wrong length");
  if (subs.empty()) throw InputError("empty substitution");
  const int m = subs[0].nvars();
  std::vector<std::map<std::int32_t, LaurentPoly>> cache(subs.size());
  auto power = [&](int i, std::int32_t k) -> const LaurentPoly& {
    auto it = cache[i].find(k);
    if (it != cache[i].end()) return it->second;
    LaurentPoly p(m);
    if (k >= 0) {
      p = pow(subs[i], static_cast<unsigned>(k));
    } else {
      if (!subs[i].is_monomial()) throw InputError("negative power of a non-monomial substitute");
      const auto& [e, c] = *subs[i].terms().begin();
      if (c != 1 && c != -1) throw InputError("negative power of a non-unit monomial");
      Exponent f(m);
      for (int j = 0; j < m; ++j) f[j] = e[j] * k;
      p = LaurentPoly::monomial(m, f, (c == -1 && (k % 2)) ? -1 : 1);
    }
    return cache[i].emplace(k, std::move(p)).first->second;
  };
  LaurentPoly r(m);
  for (const auto& [e, c] : a.terms()) {
    LaurentPoly t = LaurentPoly::constant(m, c);
    for (int i = 0; i < a.nvars(); ++i)
      if (e[i] != 0) t = t * power(i, e[i]);
    r += t;
  }
  return r;
}

}  // namespace clusterdeep
