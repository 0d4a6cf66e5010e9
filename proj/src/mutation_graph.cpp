#include "clusterdeep/mutation_graph.hpp"

#include <deque>
#include <map>
#include <sstream>

#include "clusterdeep/errors.hpp"

namespace clusterdeep {

namespace {

void check_caps(int max_depth, int max_nodes) {
  if (max_depth < 0 || max_nodes < 1) throw InputError("exploration caps must be positive");
}

IceQuiver node_form(const IceQuiver& q, Dedup d) {
  return d == Dedup::Canonical ? canonical_form(q).quiver : q;
}

MutationWord extend(const MutationWord& w, int k) {
  MutationWord r = w;
  if (!r.empty() && r.back() == k) r.pop_back();
  else r.push_back(k);
  return r;
}

}  // namespace

ExplorationReport explore_quivers(const IceQuiver& q, int max_depth, int max_nodes, Dedup dedup) {
  check_caps(max_depth, max_nodes);
  ExplorationReport r;
  std::map<IceQuiver, int> index;
  IceQuiver start = node_form(q, dedup);
  index.emplace(start, 0);
  r.nodes.push_back(start);
  r.words.push_back({});
  r.depth.push_back(0);
  for (std::size_t cur = 0; cur < r.nodes.size(); ++cur) {
    for (int k = 0; k < q.n(); ++k) {
      IceQuiver next = node_form(mutate(r.nodes[cur], k), dedup);
      auto it = index.find(next);
      if (it != index.end()) {
        r.edges.push_back({static_cast<int>(cur), k, it->second});
        continue;
      }
      if (r.depth[cur] >= max_depth) {
        r.caps_hit = "max_depth";
        continue;
      }
      if (static_cast<int>(r.nodes.size()) >= max_nodes) {
        r.caps_hit = "max_nodes";
        continue;
      }
      const int id = static_cast<int>(r.nodes.size());
      index.emplace(next, id);
      r.nodes.push_back(next);
      r.words.push_back(extend(r.words[cur], k));
      r.depth.push_back(r.depth[cur] + 1);
      r.edges.push_back({static_cast<int>(cur), k, id});
    }
  }
  r.frontier_exhausted = r.caps_hit.empty();
  return r;
}

ExplorationReport explore_seeds(const IceQuiver& q, int max_depth, int max_nodes) {
  check_caps(max_depth, max_nodes);
  ExplorationReport r;
  std::map<std::vector<LaurentPoly>, int> index;
  std::vector<Seed> seeds{initial_seed(q)};
  index.emplace(cluster_key(seeds[0]), 0);
  r.nodes.push_back(q);
  r.words.push_back({});
  r.depth.push_back(0);
  const std::size_t guard = std::max<std::size_t>(kDefaultDepthGuard, static_cast<std::size_t>(max_depth) + 1);
  for (std::size_t cur = 0; cur < seeds.size(); ++cur) {
    for (int k = 0; k < q.n(); ++k) {
      Seed next = mutate_seed(seeds[cur], k, guard);
      auto key = cluster_key(next);
      auto it = index.find(key);
      if (it != index.end()) {
        r.edges.push_back({static_cast<int>(cur), k, it->second});
        continue;
      }
      if (r.depth[cur] >= max_depth) {
        r.caps_hit = "max_depth";
        continue;
      }
      if (static_cast<int>(seeds.size()) >= max_nodes) {
        r.caps_hit = "max_nodes";
        continue;
      }
      const int id = static_cast<int>(seeds.size());
      index.emplace(std::move(key), id);
      r.nodes.push_back(next.quiver);
      r.words.push_back(next.word);
      r.depth.push_back(r.depth[cur] + 1);
      r.edges.push_back({static_cast<int>(cur), k, id});
      seeds.push_back(std::move(next));
    }
  }
  for (const auto& s : seeds) r.clusters.push_back(s.cluster);
  r.frontier_exhausted = r.caps_hit.empty();
  return r;
}

ForklessResult forkless_part(const IceQuiver& q, int max_nodes, Dedup dedup) {
  check_caps(0, max_nodes);
  ForklessResult res;
  std::map<IceQuiver, bool> seen;  // value: is a fork
  std::deque<std::pair<IceQuiver, MutationWord>> queue;
  IceQuiver start = node_form(q, dedup);
  const bool start_fork = is_fork(start).has_value();
  seen.emplace(start, start_fork);
  if (start_fork) {
    res.forks_on_boundary = 1;
    res.complete = true;
    return res;
  }
  queue.emplace_back(start, MutationWord{});
  res.members.push_back(start);
  res.words.push_back({});
  while (!queue.empty()) {
    auto [cur, word] = queue.front();
    queue.pop_front();
    for (int k = 0; k < q.n(); ++k) {
      IceQuiver next = node_form(mutate(cur, k), dedup);
      if (seen.count(next)) continue;
      const bool fork = is_fork(next).has_value();
      seen.emplace(next, fork);
      if (fork) {
        ++res.forks_on_boundary;
        continue;
      }
      if (static_cast<int>(res.members.size()) >= max_nodes) return res;
      res.members.push_back(next);
      res.words.push_back(extend(word, k));
      queue.emplace_back(next, res.words.back());
    }
  }
  res.complete = true;
  return res;
}

GrowthReport verify_entry_growth(const IceQuiver& q, const std::vector<EntryBound>& bounds, int max_depth,
                                 int max_nodes) {
  for (const auto& b : bounds)
    if (b.i < 0 || b.j < 0 || b.i >= q.n() || b.j >= q.n() || b.divisor == 0)
      throw InputError("entry bound refers to a non-mutable pair or has a zero divisor");
  ExplorationReport r = explore_quivers(q, max_depth, max_nodes, Dedup::Labeled);
  GrowthReport g;
  g.frontier_exhausted = r.frontier_exhausted;
  for (std::size_t t = 0; t < r.nodes.size(); ++t) {
    ++g.nodes_checked;
    for (const auto& b : bounds) {
      const std::int64_t v = r.nodes[t].b(b.i, b.j);
      if (std::abs(v) < b.min_abs || v % b.divisor != 0) {
        g.ok = false;
        g.counterexample = GrowthReport::Counterexample{r.words[t], b.i, b.j, v, b.min_abs, b.divisor};
        return g;
      }
    }
  }
  return g;
}

std::vector<EntryBound> key_bounds(const IceQuiver& q, const KeyPair& key) {
  std::vector<EntryBound> out;
  const int n = q.n();
  auto sigma = [&](int v) { return v == key.k ? key.k2 : v == key.k2 ? key.k : v; };
  const bool zero = q.b(key.k, key.k2) == 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::int64_t m = std::abs(q.b(i, j));
      if (!zero) m = std::min(m, std::abs(q.b(sigma(i), sigma(j))));
      out.push_back({i, j, m, 1});
    }
  return out;
}

std::string to_dot(const ExplorationReport& r) {
  std::ostringstream os;
  os << "graph exploration {\n";
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    os << "  n" << i << " [label=\"";
    for (std::size_t t = 0; t < r.words[i].size(); ++t) os << (t ? "," : "") << r.words[i][t] + 1;
    os << "\"];\n";
  }
  for (const auto& e : r.edges)
    if (e.from <= e.to) os << "  n" << e.from << " -- n" << e.to << " [label=\"" << e.k + 1 << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace clusterdeep
