#pragma once

// Independent oracles used by the unit tests and the acceptance binary. They
// share no code with the library routines they check.

#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<long>>;

inline long det(const Mat& a, const std::vector<int>& rows, const std::vector<int>& cols) {
  const std::size_t k = rows.size();
  if (k == 1) return a[rows[0]][cols[0]];
  long d = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<int> r2(rows.begin() + 1, rows.end()), c2;
    for (std::size_t t = 0; t < k; ++t)
      if (t != c) c2.push_back(cols[t]);
    long term = a[rows[0]][cols[c]] * det(a, r2, c2);
    d += (c % 2 == 0) ? term : -term;
  }
  return d;
}

inline void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1} with D_k
// the gcd of all k x k minors.
inline std::vector<long> invariant_factors(const Mat& a) {
  const int r = static_cast<int>(a.size());
  const int c = r ? static_cast<int>(a[0].size()) : 0;
  std::vector<long> out;
  long prev = 1;
  for (int k = 1; k <= std::min(r, c); ++k) {
    std::vector<std::vector<int>> rs, cs;
    std::vector<int> cur;
    subsets(r, k, 0, cur, rs);
    subsets(c, k, 0, cur, cs);
    long g = 0;
    for (const auto& rr : rs)
      for (const auto& cc : cs) g = std::gcd(g, det(a, rr, cc));
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// Number of e in (Z/N)^k with sum_j c_j e_j = 0 mod N for every constraint,
// i.e. the number of points of the group {t : t^c = 1} in mu_N^k.
inline long count_mu_n_solutions(const std::vector<std::vector<std::int64_t>>& constraints, int k, long N) {
  long total = 0;
  std::vector<long> e(k, 0);
  while (true) {
    bool ok = true;
    for (const auto& c : constraints) {
      long s = 0;
      for (int j = 0; j < k; ++j) s += c[j] * e[j];
      if (((s % N) + N) % N != 0) {
        ok = false;
        break;
      }
    }
    if (ok) ++total;
    int j = 0;
    while (j < k && ++e[j] == N) e[j++] = 0;
    if (j == k) break;
  }
  return total;
}

}  // namespace oracle
