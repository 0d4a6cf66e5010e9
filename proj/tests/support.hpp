#pragma once

#include <random>
#include <vector>

#include "clusterdeep/point.hpp"
#include "clusterdeep/quiver.hpp"

namespace test {

using namespace clusterdeep;

inline std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

inline ModelPoint point(std::initializer_list<long> p, std::initializer_list<long> pp,
                        std::initializer_list<long> f = {}) {
  return ModelPoint{ints(p), ints(pp), ints(f)};
}

// Random quiver: every mutable pair gets an arrow with probability 1/2 and
// weight 1..max_w in a random direction; frozen rows have entries in
// [-max_w, max_w].
inline IceQuiver random_quiver(std::mt19937_64& rng, int n, int m, int max_w = 2) {
  std::uniform_int_distribution<int> w(1, max_w), f(-max_w, max_w);
  std::bernoulli_distribution coin(0.5);
  IceQuiver q(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) q.set_entry(i, j, coin(rng) ? w(rng) : -w(rng));
  for (int i = n; i < n + m; ++i)
    for (int k = 0; k < n; ++k) q.set_entry(i, k, f(rng));
  return q;
}

inline std::vector<int> random_word(std::mt19937_64& rng, int n, int len) {
  std::uniform_int_distribution<int> d(0, n - 1);
  std::vector<int> w;
  while (static_cast<int>(w.size()) < len) {
    int k = d(rng);
    if (w.empty() || w.back() != k || n == 1) w.push_back(k);
  }
  return w;
}

}  // namespace test
