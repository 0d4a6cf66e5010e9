#include "clusterdeep/quiver.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "clusterdeep/errors.hpp"
#include "clusterdeep/smith.hpp"

namespace clusterdeep {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceCap("exchange matrix entry overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceCap("exchange matrix entry overflow");
  return r;
}

}  // namespace

IceQuiver::IceQuiver(int n, int m) : n_(n), m_(m) {
  if (n < 0 || m < 0) throw InputError("vertex counts must be non-negative");
  b_.assign(static_cast<std::size_t>(n + m) * n, 0);
}

IceQuiver IceQuiver::from_arrows(int n, int m, const std::vector<Arrow>& arrows) {
  IceQuiver q(n, m);
  std::set<std::pair<int, int>> seen;
  for (const auto& a : arrows) {
    const int N = n + m;
    if (a.from < 0 || a.from >= N || a.to < 0 || a.to >= N)
      throw InputError("arrow endpoint out of range");
    if (a.from == a.to) throw InputError("loops are not allowed");
    if (a.weight <= 0) throw InputError("arrow weights must be positive");
    if (a.from >= n && a.to >= n) throw InputError("arrows between frozen vertices are not allowed");
    if (!seen.insert({a.from, a.to}).second) throw InputError("duplicate arrow record");
    if (seen.count({a.to, a.from})) throw InputError("oriented 2-cycles are not allowed");
    q.set_entry(a.from, a.to, a.weight);
  }
  return q;
}

IceQuiver IceQuiver::from_matrix(int n, int m, std::vector<std::int64_t> entries) {
  if (entries.size() != static_cast<std::size_t>(n + m) * n)
    throw InputError("matrix has wrong number of entries");
  IceQuiver q(n, m);
  q.b_ = std::move(entries);
  for (int i = 0; i < n; ++i) {
    if (q.b(i, i) != 0) throw InputError("diagonal entries must be zero");
    for (int k = 0; k < n; ++k)
      if (q.b(i, k) != -q.b(k, i)) throw InputError("mutable block is not skew-symmetric");
  }
  return q;
}

std::int64_t IceQuiver::entry(int i, int j) const {
  if (j < n_) return b(i, j);
  if (i < n_) return -b(j, i);
  return 0;
}

void IceQuiver::set_entry(int i, int j, std::int64_t value) {
  if (i == j) throw InputError("loops are not allowed");
  if (i >= n_ && j >= n_) throw InputError("arrows between frozen vertices are not allowed");
  if (j < n_) b_[static_cast<std::size_t>(i) * n_ + j] = value;
  if (i < n_) b_[static_cast<std::size_t>(j) * n_ + i] = -value;
}

std::vector<IceQuiver::Arrow> IceQuiver::arrows() const {
  std::vector<Arrow> out;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (entry(i, j) > 0) out.push_back({i, j, entry(i, j)});
  return out;
}

std::vector<std::int64_t> IceQuiver::column(int k) const {
  std::vector<std::int64_t> c(size());
  for (int i = 0; i < size(); ++i) c[i] = b(i, k);
  return c;
}

IceQuiver mutate(const IceQuiver& q, int k) {
  if (k < 0 || k >= q.size()) throw InputError("mutation index out of range");
  if (k >= q.n()) throw InputError("cannot mutate at a frozen vertex");
  const int n = q.n();
  std::vector<std::int64_t> out(q.entries().size());
  for (int i = 0; i < q.size(); ++i) {
    const std::int64_t bik = q.b(i, k);
    for (int j = 0; j < n; ++j) {
      std::int64_t v = q.b(i, j);
      if (i == k || j == k) {
        v = -v;
      } else {
        const std::int64_t bkj = q.b(k, j);
        // composite arrows i -> k -> j (both positive) or j -> k -> i
        if (bik > 0 && bkj > 0) v = checked_add(v, checked_mul(bik, bkj));
        else if (bik < 0 && bkj < 0) v = checked_add(v, -checked_mul(bik, bkj));
      }
      out[static_cast<std::size_t>(i) * n + j] = v;
    }
  }
  IceQuiver r(n, q.m());
  r = IceQuiver::from_matrix(n, q.m(), std::move(out));
  return r;
}

IceQuiver mutate(const IceQuiver& q, const std::vector<int>& word) {
  IceQuiver r = q;
  for (int k : word) r = mutate(r, k);
  return r;
}

GcdVector gcd_vector(const IceQuiver& q) {
  GcdVector d(q.n(), 0);
  for (int i = 0; i < q.n(); ++i)
    for (int k = 0; k < q.n(); ++k) d[i] = std::gcd(d[i], q.b(i, k));
  return d;
}

std::vector<int> mutable_neighbors(const IceQuiver& q, int v) {
  std::vector<int> out;
  for (int u = 0; u < q.n(); ++u)
    if (u != v && q.entry(u, v) != 0) out.push_back(u);
  return out;
}

bool is_acyclic(const IceQuiver& q) {
  const int n = q.n();
  std::vector<int> indeg(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (q.b(i, j) > 0) ++indeg[j];
  std::vector<int> stack;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) stack.push_back(i);
  int seen = 0;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    ++seen;
    for (int j = 0; j < n; ++j)
      if (q.b(i, j) > 0 && --indeg[j] == 0) stack.push_back(j);
  }
  return seen == n;
}

bool is_abundant(const IceQuiver& q) {
  for (int i = 0; i < q.n(); ++i)
    for (int j = i + 1; j < q.n(); ++j)
      if (std::abs(q.b(i, j)) < 2) return false;
  return true;
}

bool is_tree(const IceQuiver& q) {
  const int n = q.n();
  if (n == 0) return false;
  int edges = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(q.b(i, j)) > 1) return false;
      if (q.b(i, j) != 0) ++edges;
    }
  if (edges != n - 1) return false;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++count;
    for (int u : mutable_neighbors(q, v))
      if (!seen[u]) {
        seen[u] = true;
        stack.push_back(u);
      }
  }
  return count == n;
}

bool is_mutable_sink(const IceQuiver& q, int v) {
  for (int u = 0; u < q.n(); ++u)
    if (q.b(v, u) > 0) return false;
  return true;
}

bool is_mutable_source(const IceQuiver& q, int v) {
  for (int u = 0; u < q.n(); ++u)
    if (q.b(v, u) < 0) return false;
  return true;
}

bool is_sink_source(const IceQuiver& q) {
  for (int v = 0; v < q.n(); ++v)
    if (!is_mutable_sink(q, v) && !is_mutable_source(q, v)) return false;
  return true;
}

bool is_really_full_rank(const IceQuiver& q) {
  if (q.n() == 0) return true;
  IntMatrix m(q.size(), q.n());
  for (int i = 0; i < q.size(); ++i)
    for (int k = 0; k < q.n(); ++k) m(i, k) = q.b(i, k);
  auto f = invariant_factors(m);
  if (static_cast<int>(f.size()) != q.n()) return false;
  return std::all_of(f.begin(), f.end(), [](const mpz_class& d) { return d == 1; });
}

Classification classify(const IceQuiver& q) {
  Classification c;
  c.acyclic = is_acyclic(q);
  c.tree_mutable = is_tree(q);
  c.sink_source_form = is_sink_source(q);
  c.abundant = is_abundant(q);
  c.really_full_rank = is_really_full_rank(q);
  return c;
}

namespace {

bool induced_acyclic(const IceQuiver& q, const std::vector<int>& verts) {
  const int s = static_cast<int>(verts.size());
  std::vector<int> indeg(s, 0);
  for (int a = 0; a < s; ++a)
    for (int c = 0; c < s; ++c)
      if (q.b(verts[a], verts[c]) > 0) ++indeg[c];
  std::vector<int> stack;
  for (int a = 0; a < s; ++a)
    if (indeg[a] == 0) stack.push_back(a);
  int seen = 0;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    ++seen;
    for (int c = 0; c < s; ++c)
      if (q.b(verts[a], verts[c]) > 0 && --indeg[c] == 0) stack.push_back(c);
  }
  return seen == s;
}

bool key_sign_strict(const IceQuiver& q, int k, int k2) {
  for (int i = 0; i < q.n(); ++i) {
    if (i == k || i == k2) continue;
    if ((q.b(k, i) > 0) != (q.b(k2, i) > 0)) return false;
  }
  return true;
}

bool key_sign_through(const IceQuiver& q, int k, int k2) {
  for (int i = 0; i < q.n(); ++i) {
    if (i == k || i == k2) continue;
    if ((q.b(k, i) > 0) != (q.b(i, k2) > 0)) return false;
  }
  return true;
}

}  // namespace

std::optional<KeyPair> is_key(const IceQuiver& q, KeyMode mode) {
  const int n = q.n();
  if (n < 2 || !is_acyclic(q)) return std::nullopt;
  for (int k = 0; k < n; ++k) {
    for (int k2 = k + 1; k2 < n; ++k2) {
      if (std::abs(q.b(k, k2)) >= 2) continue;
      bool thick = true;
      for (int i = 0; i < n && thick; ++i)
        for (int j = i + 1; j < n; ++j) {
          if (i == k && j == k2) continue;
          if (std::abs(q.b(i, j)) < 2) {
            thick = false;
            break;
          }
        }
      if (!thick) continue;
      if (key_sign_strict(q, k, k2)) return KeyPair{k, k2, true};
      if (mode == KeyMode::TranspositionTolerant &&
          (key_sign_through(q, k, k2) || key_sign_through(q, k2, k)))
        return KeyPair{k, k2, false};
    }
  }
  return std::nullopt;
}

std::vector<int> fork_returns(const IceQuiver& q) {
  std::vector<int> out;
  const int n = q.n();
  if (!is_abundant(q) || is_acyclic(q)) return out;
  for (int r = 0; r < n; ++r) {
    std::vector<int> in, outs;
    for (int j = 0; j < n; ++j) {
      if (q.b(j, r) > 0) in.push_back(j);
      if (q.b(r, j) > 0) outs.push_back(j);
    }
    if (!induced_acyclic(q, in) || !induced_acyclic(q, outs)) continue;
    bool ok = true;
    for (int i : in) {
      for (int j : outs) {
        // oriented cycle i -> r -> j -> i
        if (q.b(j, i) > 0 && !(q.b(j, i) > std::max(q.b(i, r), q.b(r, j)))) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) out.push_back(r);
  }
  return out;
}

std::optional<int> is_fork(const IceQuiver& q) {
  auto r = fork_returns(q);
  if (r.empty()) return std::nullopt;
  return r.front();
}

IceQuiver relabel(const IceQuiver& q, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != q.size()) throw InputError("relabeling has wrong size");
  std::vector<bool> hit(q.size(), false);
  for (int v = 0; v < q.size(); ++v) {
    const int w = perm[v];
    if (w < 0 || w >= q.size() || hit[w]) throw InputError("relabeling is not a permutation");
    if ((v < q.n()) != (w < q.n())) throw InputError("relabeling must preserve mutable/frozen");
    hit[w] = true;
  }
  IceQuiver r(q.n(), q.m());
  for (int i = 0; i < q.size(); ++i)
    for (int k = 0; k < q.n(); ++k)
      if (q.b(i, k) != 0) r.set_entry(perm[i], perm[k], q.b(i, k));
  return r;
}

IceQuiver mutable_part(const IceQuiver& q) {
  IceQuiver r(q.n(), 0);
  for (int i = 0; i < q.n(); ++i)
    for (int k = 0; k < q.n(); ++k)
      if (i != k) r.set_entry(i, k, q.b(i, k));
  return r;
}

IceQuiver add_frozen_rows(const IceQuiver& q, const std::vector<std::vector<std::int64_t>>& rows) {
  IceQuiver r(q.n(), q.m() + static_cast<int>(rows.size()));
  for (int i = 0; i < q.size(); ++i)
    for (int k = 0; k < q.n(); ++k)
      if (q.b(i, k) != 0) r.set_entry(i, k, q.b(i, k));
  for (std::size_t t = 0; t < rows.size(); ++t) {
    if (static_cast<int>(rows[t].size()) != q.n()) throw InputError("frozen row has wrong length");
    for (int k = 0; k < q.n(); ++k)
      if (rows[t][k] != 0) r.set_entry(q.size() + static_cast<int>(t), k, rows[t][k]);
  }
  return r;
}

std::string to_string(const IceQuiver& q) {
  std::ostringstream os;
  os << "IceQuiver(n=" << q.n() << ", m=" << q.m() << ") [";
  bool first = true;
  for (const auto& a : q.arrows()) {
    if (!first) os << ", ";
    first = false;
    os << a.from + 1 << "->" << a.to + 1;
    if (a.weight != 1) os << "(" << a.weight << ")";
  }
  os << "]";
  return os.str();
}

}  // namespace clusterdeep
