#include <algorithm>
#include <map>
#include <tuple>

#include "clusterdeep/quiver.hpp"

namespace clusterdeep {

namespace {

using Signature = std::pair<int, std::vector<std::pair<int, std::int64_t>>>;

// Colour refinement: vertices get the same colour iff they are not
// distinguished by iterated neighbourhood multisets. Colours are ranks in a
// label-independent order, so mutable vertices always precede frozen ones.
std::vector<int> refine(const IceQuiver& q, std::vector<int> color) {
  const int N = q.size();
  int classes = -1;
  for (;;) {
    std::vector<Signature> sig(N);
    for (int v = 0; v < N; ++v) {
      sig[v].first = color[v];
      for (int u = 0; u < N; ++u) {
        std::int64_t e = q.entry(v, u);
        if (e != 0) sig[v].second.emplace_back(color[u], e);
      }
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::vector<Signature> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < N; ++v)
      color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    const int now = static_cast<int>(distinct.size());
    if (now == classes) return color;
    classes = now;
  }
}

bool swap_is_automorphism(const IceQuiver& q, int a, int b) {
  for (int u = 0; u < q.size(); ++u) {
    if (u == a || u == b) continue;
    if (q.entry(a, u) != q.entry(b, u)) return false;
  }
  return q.entry(a, b) == 0;
}

struct Search {
  const IceQuiver& q;
  bool have = false;
  IceQuiver best;
  std::vector<int> best_perm;

  void leaf(const std::vector<int>& color) {
    std::vector<int> perm(color.begin(), color.end());
    IceQuiver r = relabel(q, perm);
    if (!have || r.entries() < best.entries()) {
      have = true;
      best = std::move(r);
      best_perm = std::move(perm);
    }
  }

  void run(const std::vector<int>& color) {
    const int N = q.size();
    std::map<int, std::vector<int>> cells;
    for (int v = 0; v < N; ++v) cells[color[v]].push_back(v);
    const std::vector<int>* target = nullptr;
    for (const auto& [c, members] : cells)
      if (members.size() > 1) {
        target = &members;
        break;
      }
    if (!target) {
      leaf(color);
      return;
    }
    std::vector<int> tried;
    for (int v : *target) {
      bool twin = false;
      for (int w : tried)
        if (swap_is_automorphism(q, v, w)) {
          twin = true;
          break;
        }
      if (twin) continue;
      tried.push_back(v);
      std::vector<int> c2(N);
      for (int u = 0; u < N; ++u) c2[u] = 2 * color[u] + ((color[u] == color[v] && u != v) ? 1 : 0);
      run(refine(q, c2));
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const IceQuiver& q) {
  std::vector<int> color(q.size());
  for (int v = 0; v < q.size(); ++v) color[v] = q.is_mutable(v) ? 0 : 1;
  Search s{q, false, {}, {}};
  s.run(refine(q, color));
  CanonicalForm out;
  out.quiver = s.best;
  out.relabeling.assign(q.size(), 0);
  for (int old = 0; old < q.size(); ++old) out.relabeling[s.best_perm[old]] = old;
  return out;
}

}  // namespace clusterdeep
