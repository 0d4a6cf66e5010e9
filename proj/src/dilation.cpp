#include "clusterdeep/dilation.hpp"

#include <sstream>

#include "clusterdeep/errors.hpp"

namespace clusterdeep {

std::string GroupStructure::to_string() const {
  if (trivial()) return "trivial";
  std::ostringstream os;
  bool first = true;
  if (torus_rank > 0) {
    os << "(C*)^" << torus_rank;
    first = false;
  }
  for (const auto& d : torsion) {
    os << (first ? "" : " x ") << "Z/" << d.get_str();
    first = false;
  }
  return os.str();
}

IntMatrix constraint_matrix(const std::vector<CharacterConstraint>& constraints, int N) {
  IntMatrix m(0, N);
  for (const auto& c : constraints) {
    if (static_cast<int>(c.size()) != N) throw InputError("constraint has wrong length");
    std::vector<mpz_class> row;
    for (auto x : c) row.emplace_back(static_cast<long>(x));
    m.append_row(row);
  }
  return m;
}

GroupStructure group_of(const std::vector<CharacterConstraint>& constraints, int N) {
  GroupStructure g;
  if (constraints.empty()) {
    g.torus_rank = N;
    return g;
  }
  auto f = invariant_factors(constraint_matrix(constraints, N));
  g.torus_rank = N - static_cast<int>(f.size());
  for (const auto& d : f)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

DilationGroup dilation_group(const IceQuiver& q) {
  DilationGroup d;
  for (int k = 0; k < q.n(); ++k) d.equations.push_back(q.column(k));
  d.group = group_of(d.equations, q.size());
  return d;
}

CharacterConstraint xprime_character(const IceQuiver& q, int k) {
  if (k < 0 || k >= q.n()) throw InputError("x' character requires a mutable vertex");
  CharacterConstraint c(q.size(), 0);
  for (int i = 0; i < q.size(); ++i)
    if (q.b(i, k) > 0) c[i] = q.b(i, k);
  c[k] -= 1;
  return c;
}

std::vector<CharacterConstraint> stabilizer_constraints(const IceQuiver& q, const ModelPoint& pt) {
  if (static_cast<int>(pt.p.size()) != q.n() || static_cast<int>(pt.p_prime.size()) != q.n() ||
      static_cast<int>(pt.frozen.size()) != q.m())
    throw InvalidPoint("point shape does not match the quiver");
  auto cs = dilation_group(q).equations;
  const int N = q.size();
  for (int i = 0; i < N; ++i) {
    const Rational& v = i < q.n() ? pt.p[i] : pt.frozen[i - q.n()];
    if (v != 0) {
      CharacterConstraint e(N, 0);
      e[i] = 1;
      cs.push_back(e);
    }
  }
  for (int k = 0; k < q.n(); ++k)
    if (pt.p_prime[k] != 0) cs.push_back(xprime_character(q, k));
  return cs;
}

GroupStructure stabilizer(const IceQuiver& q, const ModelPoint& pt) {
  return group_of(stabilizer_constraints(q, pt), q.size());
}

std::vector<int> freeze_relabeling(const IceQuiver& q, int k) {
  if (k < 0 || k >= q.n()) throw InputError("can only freeze a mutable vertex");
  std::vector<int> perm(q.size());
  for (int v = 0; v < q.size(); ++v) {
    if (v < k) perm[v] = v;
    else if (v == k) perm[v] = q.size() - 1;
    else perm[v] = v - 1;
  }
  return perm;
}

IceQuiver freeze_vertex(const IceQuiver& q, int k) {
  auto perm = freeze_relabeling(q, k);
  IceQuiver r(q.n() - 1, q.m() + 1);
  for (int i = 0; i < q.size(); ++i)
    for (int j = 0; j < q.n(); ++j) {
      if (j == k) continue;
      if (q.b(i, j) != 0) r.set_entry(perm[i], perm[j], q.b(i, j));
    }
  return r;
}

std::vector<std::string> default_vertex_names(int N) {
  std::vector<std::string> names;
  for (int i = 0; i < N; ++i) names.push_back(std::to_string(i + 1));
  return names;
}

namespace {

std::string monomial_text(const std::vector<std::pair<std::string, std::int64_t>>& factors) {
  std::string s;
  for (const auto& [name, e] : factors) {
    if (!s.empty()) s += " ";
    s += "t" + name;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace

std::string render_constraint(const CharacterConstraint& c, const std::vector<std::string>& names) {
  auto nm = names.empty() ? default_vertex_names(static_cast<int>(c.size())) : names;
  std::vector<std::pair<std::string, std::int64_t>> lhs, rhs;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] > 0) lhs.emplace_back(nm[i], c[i]);
    if (c[i] < 0) rhs.emplace_back(nm[i], -c[i]);
  }
  if (lhs.empty() && rhs.empty()) return "1 = 1";
  if (rhs.empty()) return monomial_text(lhs) + " = 1";
  if (lhs.empty()) return monomial_text(rhs) + " = 1";
  return monomial_text(lhs) + " = " + monomial_text(rhs);
}

mpz_class StabilizerElement::element_order() const {
  if (kind == Kind::OneParameter) return 0;
  mpz_class g = order;
  for (const auto& e : exponents) g = gcd(g, e);
  return g == 0 ? mpz_class(1) : mpz_class(order / g);
}

bool StabilizerElement::nontrivial() const {
  if (kind == Kind::OneParameter) {
    for (const auto& e : exponents)
      if (e != 0) return true;
    return false;
  }
  return element_order() > 1;
}

std::string StabilizerElement::to_string(const std::vector<std::string>& names) const {
  (void)names;
  std::ostringstream os;
  const char* base = kind == Kind::OneParameter ? "s" : "z";
  os << "(";
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i) os << ", ";
    mpz_class e = exponents[i];
    if (kind == Kind::Torsion) {
      e %= order;
      if (e < 0) e += order;
    }
    if (e == 0) os << "1";
    else if (e == 1) os << base;
    else os << base << "^" << e.get_str();
  }
  os << ")";
  if (kind == Kind::Torsion) os << ", z a primitive " << order.get_str() << "-th root of unity";
  else os << ", s in C*";
  return os.str();
}

bool satisfies(const StabilizerElement& e, const std::vector<CharacterConstraint>& constraints) {
  for (const auto& c : constraints) {
    if (c.size() != e.exponents.size()) return false;
    mpz_class dot = 0;
    for (std::size_t i = 0; i < c.size(); ++i) dot += mpz_class(static_cast<long>(c[i])) * e.exponents[i];
    if (e.kind == StabilizerElement::Kind::OneParameter) {
      if (dot != 0) return false;
    } else if (dot % e.order != 0) {
      return false;
    }
  }
  return true;
}

std::vector<StabilizerElement> group_generators(const std::vector<CharacterConstraint>& constraints, int N) {
  std::vector<StabilizerElement> out;
  if (constraints.empty()) {
    for (int j = 0; j < N; ++j) {
      StabilizerElement e{StabilizerElement::Kind::OneParameter, 0, std::vector<mpz_class>(N, 0)};
      e.exponents[j] = 1;
      out.push_back(e);
    }
    return out;
  }
  SmithForm s = smith_normal_form(constraint_matrix(constraints, N));
  for (int j = 0; j < N; ++j) {
    StabilizerElement e;
    for (int i = 0; i < N; ++i) e.exponents.push_back(s.V(i, j));
    if (j < s.rank) {
      if (s.D(j, j) == 1) continue;
      e.kind = StabilizerElement::Kind::Torsion;
      e.order = s.D(j, j);
      for (auto& x : e.exponents) {
        x %= e.order;
        if (x < 0) x += e.order;
      }
    } else {
      e.kind = StabilizerElement::Kind::OneParameter;
    }
    out.push_back(e);
  }
  return out;
}

}  // namespace clusterdeep
