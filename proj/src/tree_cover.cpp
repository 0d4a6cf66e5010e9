#include "clusterdeep/tree_cover.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "clusterdeep/errors.hpp"

namespace clusterdeep {

namespace {

[[noreturn]] void internal(const std::string& msg) { throw Error("InternalError", "tree cover: " + msg); }

std::string label(int v) { return std::to_string(v + 1); }

// Sink/source flips within the vertex set `comp` of q (whose induced graph
// must be a tree with simple edges) reaching a bipartite orientation.
MutationWord flip_word(const IceQuiver& q, const std::vector<int>& comp) {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t a = 0; a < comp.size(); ++a)
    for (std::size_t b = a + 1; b < comp.size(); ++b)
      if (q.b(comp[a], comp[b]) != 0) edges.emplace_back(comp[a], comp[b]);
  if (edges.size() > 40) throw ResourceCap("tree component too large to reorient");
  using State = std::uint64_t;
  State start = 0;
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (q.b(edges[e].first, edges[e].second) > 0) start |= State{1} << e;

  // +1: all incident edges point into v, -1: all out, 0: mixed.
  auto kind = [&](State s, int v) {
    bool in = false, out = false;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [a, b] = edges[e];
      if (a != v && b != v) continue;
      bool a_to_b = (s >> e) & 1;
      bool into_v = (b == v) == a_to_b;
      (into_v ? in : out) = true;
    }
    return in && out ? 0 : (in ? 1 : -1);
  };
  auto bipartite = [&](State s) {
    for (int v : comp)
      if (kind(s, v) == 0) return false;
    return true;
  };
  auto flip = [&](State s, int v) {
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (edges[e].first == v || edges[e].second == v) s ^= State{1} << e;
    return s;
  };

  if (bipartite(start)) return {};
  std::unordered_map<State, std::pair<State, int>> prev;
  std::deque<State> queue{start};
  prev.emplace(start, std::make_pair(start, -1));
  constexpr std::size_t kStateCap = 1u << 22;
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    for (int v : comp) {
      if (kind(s, v) == 0) continue;
      State t = flip(s, v);
      if (prev.count(t)) continue;
      prev.emplace(t, std::make_pair(s, v));
      if (bipartite(t)) {
        MutationWord w;
        for (State x = t; x != start; x = prev[x].first) w.push_back(prev[x].second);
        std::reverse(w.begin(), w.end());
        return w;
      }
      if (prev.size() > kStateCap) throw ResourceCap("orientation search exceeded its state cap");
      queue.push_back(t);
    }
  }
  internal("no sink/source sequence reaches a bipartite orientation");
}

struct Engine {
  const IceQuiver& q0;
  const ModelPoint& pt;
  std::vector<Chart> history;
  std::vector<bool> active;
  std::vector<Witness> derived;
  TreeCoverResult res;

  Engine(const IceQuiver& q, const ModelPoint& p) : q0(q), pt(p), active(q.n(), true) {
    history.push_back(initial_chart(q, p));
  }

  const Chart& cur() const { return history.back(); }

  Rational val(int v) const {
    if (!cur().z[v]) internal("value at vertex " + label(v) + " is undetermined");
    return *cur().z[v];
  }

  Value prime(int v) const { return cur().zp[v]; }

  void mutate(int k, const std::string& why) {
    StepOptions opt;
    opt.derived = &derived;
    chart_step(history, k, opt);
    res.trace.push_back("mutate " + label(k) + " (" + why + ")");
  }

  void freeze(int k, const std::string& why) {
    if (val(k) == 0) internal("freezing vertex " + label(k) + " with zero value");
    const IceQuiver& Q = cur().quiver;
    for (int u = 0; u < Q.size(); ++u)
      if (u != k && Q.b(u, k) != 0 && val(u) == 0)
        internal("freezing vertex " + label(k) + " next to zero vertex " + label(u));
    active[k] = false;
    res.trace.push_back("freeze " + label(k) + " (" + why + ")");
  }

  std::vector<int> neighbors(int v, const std::vector<int>& comp) const {
    std::vector<int> out;
    for (int u : comp)
      if (u != v && cur().quiver.b(u, v) != 0) out.push_back(u);
    return out;
  }

  std::vector<int> component() const {
    int start = -1;
    for (int v = 0; v < q0.n(); ++v)
      if (active[v]) {
        start = v;
        break;
      }
    if (start < 0) return {};
    const IceQuiver& Q = cur().quiver;
    std::vector<int> comp{start};
    std::vector<bool> seen(q0.n(), false);
    seen[start] = true;
    for (std::size_t h = 0; h < comp.size(); ++h)
      for (int u = 0; u < q0.n(); ++u) {
        if (!active[u] || Q.b(u, comp[h]) == 0) continue;
        if (std::abs(Q.b(u, comp[h])) != 1) internal("multiple edge inside the active tree");
        if (!seen[u]) {
          seen[u] = true;
          comp.push_back(u);
        }
      }
    std::sort(comp.begin(), comp.end());
    std::size_t edges = 0;
    for (std::size_t a = 0; a < comp.size(); ++a)
      for (std::size_t b = a + 1; b < comp.size(); ++b)
        if (Q.b(comp[a], comp[b]) != 0) ++edges;
    if (edges + 1 != comp.size()) internal("active part is not a forest");
    return comp;
  }

  // Exponents along the subtree below v (v in I, reached from parent).
  void assign_subtree(int v, int parent, long e, const std::set<int>& I, const std::vector<int>& comp,
                      std::vector<mpz_class>& t) const {
    t[v] = e;
    for (int c : neighbors(v, comp)) {
      if (c == parent) continue;
      if (I.count(c)) internal("adjacent zero vertices");
      t[c] = 0;
      auto below = neighbors(c, comp);
      below.erase(std::remove(below.begin(), below.end(), v), below.end());
      if (below.empty()) {
        if (e != 0) internal("propagation reached a nonzero leaf");
        continue;
      }
      bool first = true;
      for (int g : below) {
        if (!I.count(g)) internal("propagation met two adjacent nonzero vertices");
        assign_subtree(g, c, first ? -e : 0, I, comp, t);
        first = false;
      }
    }
  }

  void finish_with_element(const std::vector<mpz_class>& v, const std::string& why) {
    const Chart& c = cur();
    const IceQuiver& Q = c.quiver;
    const int N = Q.size();
    std::vector<CharacterConstraint> cs;
    for (int k = 0; k < Q.n(); ++k)
      if (active[k]) cs.push_back(Q.column(k));
    for (int i = 0; i < N; ++i)
      if (val(i) != 0) {
        CharacterConstraint e(N, 0);
        e[i] = 1;
        cs.push_back(e);
      }
    for (int k = 0; k < Q.n(); ++k) {
      if (!active[k]) continue;
      if (!c.zp[k]) internal("undetermined x' value at active vertex " + label(k));
      if (*c.zp[k] != 0) cs.push_back(xprime_character(Q, k));
    }
    StabilizerElement ce{StabilizerElement::Kind::OneParameter, 0, v};
    if (!ce.nontrivial() || !satisfies(ce, cs)) internal("constructed chart element is not a stabilizer element");

    IntMatrix X(N, N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) X(i, j) = c.chi[i][j];
    IntMatrix Xi = unimodular_inverse(X);
    std::vector<mpz_class> u(N, 0);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) u[i] += Xi(i, j) * v[j];
    StabilizerElement oe{StabilizerElement::Kind::OneParameter, 0, u};
    if (!oe.nontrivial() || !satisfies(oe, stabilizer_constraints(q0, pt)))
      internal("element does not transfer to the initial seed");
    res.in_torus = false;
    res.chart_element = ce;
    res.element = oe;
    res.element_word = c.word;
    res.trace.push_back("stabilizer (" + why + ")");
  }

  void normalize(const std::vector<int>& comp) {
    for (int k : flip_word(cur().quiver, comp)) mutate(k, "sink/source flip");
  }

  // Returns false when a stabilizer element ended the search.
  bool level() {
    auto comp = component();
    normalize(comp);
    std::set<int> I;
    for (int v : comp)
      if (val(v) == 0) I.insert(v);
    for (int i : I)
      for (int j : neighbors(i, comp))
        if (I.count(j)) internal("zero set is not independent in the current chart");

    if (comp.size() == 1) {
      int k = comp[0];
      if (val(k) != 0) {
        freeze(k, "isolated, nonzero");
      } else if (!prime(k)) {
        internal("undetermined x' at isolated vertex " + label(k));
      } else if (*prime(k) != 0) {
        mutate(k, "isolated, x' nonzero");
        freeze(k, "isolated, nonzero after mutation");
      } else {
        std::vector<mpz_class> t(q0.size(), 0);
        t[k] = 1;
        finish_with_element(t, "isolated vertex with x = x' = 0");
        return false;
      }
      return true;
    }

    for (int v : comp) {
      if (I.count(v)) continue;
      bool free = true;
      for (int u : neighbors(v, comp))
        if (I.count(u)) free = false;
      if (free) {
        freeze(v, "case 1: zero set not maximal");
        return true;
      }
    }

    for (int i : I) {
      if (!prime(i)) internal("undetermined x' at zero vertex " + label(i));
      if (*prime(i) != 0) {
        mutate(i, "case 2: x' nonzero");
        freeze(i, "case 2: nonzero after mutation");
        return true;
      }
    }

    for (int j : comp) {
      if (I.count(j)) continue;
      auto nb = neighbors(j, comp);
      if (nb.size() != 1) continue;
      int i = nb[0];
      mutate(j, "case 2.1: leaf outside the zero set");
      mutate(i, "case 2.1: its zero neighbour");
      freeze(i, "case 2.1");
      return true;
    }

    std::set<int> sinks, sources;
    for (int v : comp) (is_mutable_sink_in(v, comp) ? sinks : sources).insert(v);
    if (I == sinks || I == sources) {
      int j = -1;
      for (int v : comp)
        if (!I.count(v)) {
          j = v;
          break;
        }
      auto nb = neighbors(j, comp);
      if (nb.size() < 2) internal("case 2.2.1 vertex has fewer than two neighbours");
      std::vector<mpz_class> t(q0.size(), 0);
      assign_subtree(nb[0], j, 1, I, comp, t);
      assign_subtree(nb[1], j, -1, I, comp, t);
      finish_with_element(t, std::string("case 2.2.1: zero set is all ") + (I == sinks ? "sinks" : "sources"));
      return false;
    }

    // Case 2.2.2: deepest adjacent pair outside the zero set, rooted at the
    // smallest vertex.
    const int r = comp[0];
    std::map<int, int> dist{{r, 0}};
    std::map<int, int> parent{{r, -1}};
    std::deque<int> queue{r};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int u : neighbors(v, comp))
        if (!dist.count(u)) {
          dist[u] = dist[v] + 1;
          parent[u] = v;
          queue.push_back(u);
        }
    }
    int j0 = -1, j1 = -1, best = -1;
    for (int v : comp) {
      if (I.count(v) || v == r) continue;
      int p = parent[v];
      if (I.count(p)) continue;
      if (dist[v] > best) {
        best = dist[v];
        j0 = v;
        j1 = p;
      }
    }
    if (j0 < 0) internal("case 2.2.2 found no adjacent nonzero pair");
    std::vector<int> children;
    for (int u : neighbors(j0, comp)) {
      if (u == j1) continue;
      if (!I.count(u)) internal("case 2.2.2 pair is not the deepest");
      children.push_back(u);
    }
    if (children.empty()) internal("case 2.2.2 vertex has no zero child");
    if (children.size() >= 2) {
      std::vector<mpz_class> t(q0.size(), 0);
      assign_subtree(children[0], j0, 1, I, comp, t);
      assign_subtree(children[1], j0, -1, I, comp, t);
      finish_with_element(t, "case 2.2.2: two zero children below " + label(j0));
      return false;
    }
    int i0 = children[0];
    mutate(j0, "case 2.2.2: deepest nonzero pair");
    mutate(i0, "case 2.2.2: its zero child");
    freeze(i0, "case 2.2.2");
    return true;
  }

  bool is_mutable_sink_in(int v, const std::vector<int>& comp) const {
    for (int u : neighbors(v, comp))
      if (cur().quiver.b(u, v) < 0) return false;
    return true;
  }

  void run() {
    while (std::any_of(active.begin(), active.end(), [](bool a) { return a; }))
      if (!level()) return;
    for (int v = 0; v < q0.size(); ++v)
      if (val(v) == 0) internal("final chart has a zero value");
    res.in_torus = true;
    res.word = cur().word;
    for (const auto& w : derived)
      if (std::find(res.witnesses.begin(), res.witnesses.end(), w) == res.witnesses.end()) res.witnesses.push_back(w);
  }
};

}  // namespace

TreeCoverResult tree_cover(const IceQuiver& q, const ModelPoint& pt) {
  if (!is_tree(q)) throw InputError("the mutable part is not a tree with simple edges", "NotTree");
  require_valid(q, pt);
  Engine e(q, pt);
  e.run();
  return std::move(e.res);
}

CoverCheck verify_cover(const IceQuiver& q, const ModelPoint& pt, const TreeCoverResult& r) {
  CoverCheck c;
  try {
    if (r.in_torus) {
      auto m = torus_membership(q, pt, r.word, r.witnesses);
      c.ok = m == Membership::In;
      c.message = "replay: " + to_string(m);
    } else {
      if (!r.element) {
        c.message = "no stabilizer element";
        return c;
      }
      c.ok = r.element->nontrivial() && satisfies(*r.element, stabilizer_constraints(q, pt));
      c.message = c.ok ? "element fixes the point" : "element does not fix the point";
    }
  } catch (const Error& e) {
    c.ok = false;
    c.message = e.what();
  }
  return c;
}

MutationWord sink_source_word(const IceQuiver& q) {
  std::vector<int> all(q.n());
  for (int i = 0; i < q.n(); ++i) all[i] = i;
  return flip_word(q, all);
}

IceQuiver reduced_tree(int n, const std::vector<std::pair<int, int>>& edges, int source_color) {
  if (n < 1) throw InputError("a tree needs at least one vertex");
  if (static_cast<int>(edges.size()) != n - 1) throw InputError("a tree on n vertices has n-1 edges");
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) throw InputError("bad tree edge");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> color(n, -1);
  color[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : adj[v])
      if (color[u] < 0) {
        color[u] = 1 - color[v];
        queue.push_back(u);
      }
  }
  IceQuiver Q(n, n);
  for (int v = 0; v < n; ++v)
    if (color[v] < 0) throw InputError("tree edges do not connect all vertices");
  for (auto [a, b] : edges) {
    if (color[a] == source_color % 2) Q.set_entry(a, b, 1);
    else Q.set_entry(b, a, 1);
  }
  for (int v = 0; v < n; ++v) {
    bool source = n > 1 && color[v] == source_color % 2;
    if (source) Q.set_entry(v, n + v, 1);
    else Q.set_entry(n + v, v, 1);
  }
  return Q;
}

IceQuiver reduce_tree_form(const IceQuiver& q) {
  if (!is_tree(q)) throw InputError("the mutable part is not a tree with simple edges", "NotTree");
  IceQuiver m = mutable_part(mutate(q, sink_source_word(q)));
  const int n = q.n();
  IceQuiver Q(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m.b(i, j) > 0) Q.set_entry(i, j, m.b(i, j));
  for (int v = 0; v < n; ++v) {
    if (n > 1 && is_mutable_source(m, v)) Q.set_entry(v, n + v, 1);
    else Q.set_entry(n + v, v, 1);
  }
  return Q;
}

std::vector<std::pair<int, int>> random_tree_edges(int n, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> edges;
  if (n <= 1) return edges;
  if (n == 2) return {{0, 1}};
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(n - 2);
  for (auto& c : code) c = pick(rng);
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  for (int c : code) {
    for (int v = 0; v < n; ++v)
      if (degree[v] == 1) {
        edges.emplace_back(v, c);
        --degree[v];
        --degree[c];
        break;
      }
  }
  int a = -1;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) {
      if (a < 0) a = v;
      else edges.emplace_back(a, v);
    }
  return edges;
}

}  // namespace clusterdeep
