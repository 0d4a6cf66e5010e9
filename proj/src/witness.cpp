#include "clusterdeep/witness.hpp"

#include <algorithm>
#include <sstream>

#include "clusterdeep/errors.hpp"

namespace clusterdeep {

namespace {

std::string word_text(const MutationWord& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i] + 1);
  return s + "]";
}

void check_word(const MutationWord& w, int n) {
  for (int k : w)
    if (k < 0 || k >= n) throw InputError("mutation word letter out of range");
}

// Dense exact solve of A c = b (A given by columns). Free variables are 0.
std::optional<std::vector<Rational>> solve_columns(const std::vector<std::map<Exponent, Rational>>& cols,
                                                   const std::map<Exponent, Rational>& rhs) {
  std::map<Exponent, int> row_index;
  for (const auto& c : cols)
    for (const auto& [e, v] : c) row_index.emplace(e, 0);
  for (const auto& [e, v] : rhs) row_index.emplace(e, 0);
  int r = 0;
  for (auto& [e, idx] : row_index) idx = r++;
  const int rows = r, ncols = static_cast<int>(cols.size());
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(ncols + 1, 0));
  for (int j = 0; j < ncols; ++j)
    for (const auto& [e, v] : cols[j]) a[row_index[e]][j] = v;
  for (const auto& [e, v] : rhs) a[row_index[e]][ncols] = v;

  std::vector<int> pivot_col;
  int prow = 0;
  for (int j = 0; j < ncols && prow < rows; ++j) {
    int sel = -1;
    for (int i = prow; i < rows; ++i)
      if (a[i][j] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(a[sel], a[prow]);
    Rational inv = 1 / a[prow][j];
    for (int t = j; t <= ncols; ++t) a[prow][t] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == prow || a[i][j] == 0) continue;
      Rational f = a[i][j];
      for (int t = j; t <= ncols; ++t) a[i][t] -= f * a[prow][t];
    }
    pivot_col.push_back(j);
    ++prow;
  }
  for (int i = prow; i < rows; ++i)
    if (a[i][ncols] != 0) return std::nullopt;
  std::vector<Rational> x(ncols, 0);
  for (int i = 0; i < prow; ++i) x[pivot_col[i]] = a[i][ncols];
  return x;
}

std::map<Exponent, Rational> as_rational(const LaurentPoly& p) {
  std::map<Exponent, Rational> out;
  for (const auto& [e, c] : p.terms()) out.emplace(e, Rational(c));
  return out;
}

// All exponent vectors of total degree <= d over the allowed variables.
void monomials_up_to(int nvars, const std::vector<int>& allowed, int d, std::vector<Exponent>& out) {
  Exponent e(nvars, 0);
  std::vector<Exponent> level{e};
  out.push_back(e);
  for (int deg = 1; deg <= d; ++deg) {
    std::vector<Exponent> next;
    for (const auto& base : level) {
      // Only extend with variables >= the last one used, to avoid repeats.
      int last = -1;
      for (int v = nvars - 1; v >= 0; --v)
        if (base[v] > 0) {
          last = v;
          break;
        }
      for (int v : allowed) {
        if (v < last) continue;
        Exponent x = base;
        ++x[v];
        next.push_back(x);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
}

LaurentPoly product_of(const Exponent& e, const std::vector<LaurentPoly>& gens) {
  LaurentPoly r = LaurentPoly::constant(gens.front().nvars(), 1);
  for (std::size_t v = 0; v < e.size(); ++v)
    if (e[v] > 0) r = r * pow(gens[v], static_cast<unsigned>(e[v]));
  return r;
}

}  // namespace

std::vector<std::string> chart_generator_names(int n, int m) {
  std::vector<std::string> names;
  for (int i = 0; i < n + m; ++i) names.push_back("x" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1) + "'");
  return names;
}

std::string Witness::to_string(int n, int m) const {
  auto names = chart_generator_names(n, m);
  std::ostringstream os;
  os << "y(" << word_text(target_word) << ", " << vertex + 1 << ") * (" << denominator.to_string(names)
     << ") = " << numerator.to_string(names) << "  [chart " << word_text(base_word) << "]";
  return os.str();
}

Seed SymbolicCache::seed(const MutationWord& w) {
  check_word(w, q_.n());
  std::lock_guard<std::mutex> lock(mu_);
  auto it = seeds_.find(w);
  if (it != seeds_.end()) return it->second;
  std::size_t len = w.size();
  Seed s = initial_seed(q_);
  while (len > 0) {
    auto f = seeds_.find(MutationWord(w.begin(), w.begin() + static_cast<long>(len)));
    if (f != seeds_.end()) {
      s = f->second;
      break;
    }
    --len;
  }
  for (std::size_t i = len; i < w.size(); ++i) {
    s = mutate_seed(s, w[i]);
    seeds_.emplace(MutationWord(w.begin(), w.begin() + static_cast<long>(i + 1)), s);
  }
  return s;
}

std::vector<LaurentPoly> SymbolicCache::chart_generators(const MutationWord& w) {
  Seed s = seed(w);
  std::vector<LaurentPoly> gens = s.cluster;
  for (int j = 0; j < q_.n(); ++j) gens.push_back(one_step(w, j));
  return gens;
}

LaurentPoly SymbolicCache::one_step(const MutationWord& w, int k) {
  if (k < 0 || k >= q_.n()) throw InputError("one-step direction out of range");
  MutationWord x = w;
  x.push_back(k);
  return seed(x).cluster[k];
}

WitnessCheck verify_witness(const IceQuiver& q, const Witness& w) {
  SymbolicCache cache(q);
  return verify_witness(cache, w);
}

WitnessCheck verify_witness(SymbolicCache& cache, const Witness& w) {
  const IceQuiver& q = cache.quiver();
  const int nv = q.size() + q.n();
  WitnessCheck r;
  if (w.vertex < 0 || w.vertex >= q.n()) {
    r.message = "witness vertex out of range";
    return r;
  }
  if (w.numerator.nvars() != nv || w.denominator.nvars() != nv) {
    r.message = "witness polynomials must use " + std::to_string(nv) + " chart generators";
    return r;
  }
  if (w.denominator.is_zero()) {
    r.message = "witness denominator is zero";
    return r;
  }
  try {
    auto gens = cache.chart_generators(w.base_word);
    LaurentPoly y = cache.one_step(w.target_word, w.vertex);
    LaurentPoly num = compose(w.numerator, gens);
    LaurentPoly den = compose(w.denominator, gens);
    r.difference = y * den - num;
    r.ok = r.difference.is_zero();
    r.message = r.ok ? "identity holds" : "identity fails";
  } catch (const Error& e) {
    r.ok = false;
    r.message = e.what();
  }
  return r;
}

std::optional<Witness> two_step_witness(const IceQuiver& current, const MutationWord& base_word, int k, int j) {
  if (j == k || std::abs(current.b(k, j)) != 1) return std::nullopt;
  const int N = current.size(), nv = N + current.n();
  auto [pk_pos, pk_neg] = exchange_exponents(current, k);
  const bool pos_has_j = pk_pos[j] > 0;
  Exponent U = pos_has_j ? pk_neg : pk_pos;
  Exponent V = pos_has_j ? pk_pos : pk_neg;
  V[j] -= 1;
  auto [pj_pos, pj_neg] = exchange_exponents(current, j);
  Exponent Z = pj_pos[k] > 0 ? pj_neg : pj_pos;

  Exponent den(nv, 0), u(nv, 0), vz(nv, 0);
  for (int i = 0; i < N; ++i) {
    den[i] = std::min(U[i], Z[i]);
    u[i] = U[i];
    vz[i] = V[i] + Z[i];
  }
  den[k] += 1;
  u[N + j] += 1;
  Witness w;
  w.base_word = base_word;
  w.target_word = base_word;
  w.target_word.push_back(k);
  w.vertex = j;
  w.denominator = LaurentPoly::monomial(nv, den);
  w.numerator = LaurentPoly::monomial(nv, u) + LaurentPoly::monomial(nv, vz);
  return w;
}

std::optional<Witness> solve_witness(const IceQuiver& q, const MutationWord& word, int k, int degree_bound,
                                     const ModelPoint* pt) {
  check_word(word, q.n());
  if (k < 0 || k >= q.n()) throw InputError("witness vertex out of range");
  SymbolicCache cache(q);
  const int N = q.size(), nv = N + q.n();
  auto gens = cache.chart_generators({});
  LaurentPoly y = cache.one_step(word, k);

  std::vector<int> all(nv), allowed;
  for (int v = 0; v < nv; ++v) all[v] = v;
  for (int v = 0; v < nv; ++v) {
    if (pt == nullptr) {
      allowed.push_back(v);
      continue;
    }
    Rational val = v < q.n() ? pt->p[v] : v < N ? pt->frozen[v - q.n()] : pt->p_prime[v - N];
    if (val != 0) allowed.push_back(v);
  }

  std::vector<Exponent> num_mons;
  monomials_up_to(nv, all, degree_bound, num_mons);
  constexpr std::size_t kAnsatzCap = 400;
  if (num_mons.size() <= kAnsatzCap) {
    std::vector<std::map<Exponent, Rational>> cols;
    for (const auto& e : num_mons) cols.push_back(as_rational(product_of(e, gens)));
    std::vector<Exponent> den_mons;
    monomials_up_to(nv, allowed, 2, den_mons);
    for (const auto& d : den_mons) {
      LaurentPoly target = y * product_of(d, gens);
      auto sol = solve_columns(cols, as_rational(target));
      if (!sol) continue;
      mpz_class l = 1;
      for (const auto& c : *sol) l = lcm(l, mpz_class(c.get_den()));
      Witness w;
      w.target_word = word;
      w.vertex = k;
      w.denominator = LaurentPoly::monomial(nv, d, l);
      w.numerator = LaurentPoly(nv);
      for (std::size_t i = 0; i < sol->size(); ++i) {
        Rational c = (*sol)[i] * l;
        if (c != 0) w.numerator.add_term(num_mons[i], c.get_num());
      }
      if (verify_witness(cache, w).ok) return w;
    }
  }

  if (!word.empty()) {
    MutationWord base(word.begin(), word.end() - 1);
    auto w = two_step_witness(mutate(q, base), base, word.back(), k);
    if (w && verify_witness(cache, *w).ok) return w;
  }
  return std::nullopt;
}

}  // namespace clusterdeep
