#include "clusterdeep/api.hpp"

#include "httplib.h"

#include "clusterdeep/gallery.hpp"
#include "clusterdeep/mutation_graph.hpp"

namespace clusterdeep::api {

namespace {

const json& field(const json& req, const char* key) {
  if (!req.is_object() || !req.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return req.at(key);
}

int int_field(const json& req, const char* key, int fallback) {
  if (!req.is_object() || !req.contains(key)) return fallback;
  if (!req[key].is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
  return req[key].get<int>();
}

int vertex_field(const json& req, const IceQuiver& q) {
  int k = int_field(req, "k", 0);
  if (k < 1 || k > q.n()) throw InputError("'k' must be a mutable vertex between 1 and " + std::to_string(q.n()));
  return k - 1;
}

void check_word(const MutationWord& w, const IceQuiver& q) {
  for (int k : w)
    if (k >= q.n()) throw InputError("word letter " + std::to_string(k + 1) + " is not a mutable vertex");
}

std::pair<IceQuiver, ModelPoint> quiver_and_point(const json& req) {
  return {quiver_from_json(field(req, "quiver")), point_from_json(field(req, "point"))};
}

json constraints_json(const std::vector<CharacterConstraint>& cs, int N) {
  json out = json::array();
  auto names = default_vertex_names(N);
  for (const auto& c : cs) out.push_back({{"exponents", c}, {"text", render_constraint(c, names)}});
  return out;
}

}  // namespace

json mutate(const json& req) {
  IceQuiver q = quiver_from_json(field(req, "quiver"));
  MutationWord w;
  if (req.contains("word")) w = word_from_json(req["word"]);
  else w = {vertex_field(req, q)};
  check_word(w, q);
  return {{"quiver", to_json(clusterdeep::mutate(q, w))}, {"word", word_to_json(w)}};
}

json classify(const json& req) {
  IceQuiver q = quiver_from_json(field(req, "quiver"));
  json out = to_json(clusterdeep::classify(q));
  out["gcd_vector"] = gcd_vector(q);
  auto strict = is_key(q, KeyMode::Strict);
  auto tolerant = is_key(q, KeyMode::TranspositionTolerant);
  out["key"] = strict ? json{strict->k + 1, strict->k2 + 1} : json(nullptr);
  out["key_tolerant"] = tolerant ? json{tolerant->k + 1, tolerant->k2 + 1} : json(nullptr);
  auto fork = is_fork(q);
  out["fork"] = fork ? json(*fork + 1) : json(nullptr);
  out["dilation"] = to_json(dilation_group(q).group);
  return out;
}

json dilation(const json& req) {
  IceQuiver q = quiver_from_json(field(req, "quiver"));
  DilationGroup d = dilation_group(q);
  return {{"equations", constraints_json(d.equations, q.size())}, {"group", to_json(d.group)}};
}

json stabilizer(const json& req) {
  auto [q, pt] = quiver_and_point(req);
  require_valid(q, pt);
  auto cs = stabilizer_constraints(q, pt);
  json gens = json::array();
  for (const auto& g : group_generators(cs, q.size()))
    if (g.nontrivial()) gens.push_back(to_json(g));
  return {{"group", to_json(group_of(cs, q.size()))},
          {"constraints", constraints_json(cs, q.size())},
          {"generators", gens}};
}

json validate(const json& req) {
  auto [q, pt] = quiver_and_point(req);
  auto violations = validate_point(q, pt);
  json v = json::array();
  for (const auto& r : violations)
    v.push_back({{"vertex", r.vertex + 1}, {"lhs", to_string(r.lhs)}, {"rhs", to_string(r.rhs)}});
  json out = {{"valid", violations.empty()}, {"violations", v}};
  if (violations.empty()) out["stratum"] = word_to_json(stratum_of(q, pt));
  return out;
}

json propagate(const json& req) {
  auto [q, pt] = quiver_and_point(req);
  MutationWord w = req.contains("word") ? word_from_json(req["word"]) : MutationWord{};
  check_word(w, q);
  std::vector<Witness> ws;
  if (req.contains("witnesses")) {
    if (!req["witnesses"].is_array()) throw InputError("'witnesses' must be an array");
    for (const auto& j : req["witnesses"]) ws.push_back(witness_from_json(j, q.n(), q.m()));
  }
  Propagation p = clusterdeep::propagate(q, pt, w, ws);
  json charts = json::array();
  for (const auto& c : p.history)
    charts.push_back({{"word", word_to_json(c.word)}, {"z", values_to_json(c.z)}, {"z_prime", values_to_json(c.zp)}});
  const auto& last = p.history.back();
  return {{"word", word_to_json(w)},
          {"values", values_to_json(last.z)},
          {"membership", to_string(membership_of(last.z))},
          {"charts", charts}};
}

json deep_check(const json& req) {
  auto [q, pt] = quiver_and_point(req);
  std::optional<CertKind> kind;
  if (req.contains("cert") && !req["cert"].is_null()) {
    if (!req["cert"].is_string()) throw InputError("'cert' must be a string");
    kind = parse_cert_kind(req["cert"].get<std::string>());
  }
  int cap = int_field(req, "fork_cap", 10000);
  return to_json(is_mysterious(q, pt, kind, cap), q);
}

json tree_cover(const json& req) {
  auto [q, pt] = quiver_and_point(req);
  require_valid(q, pt);
  TreeCoverResult r = clusterdeep::tree_cover(q, pt);
  CoverCheck c = verify_cover(q, pt, r);
  json out = to_json(r, q);
  out["verified"] = c.ok;
  out["check"] = c.message;
  return out;
}

json freeze(const json& req) {
  IceQuiver q = quiver_from_json(field(req, "quiver"));
  int k = vertex_field(req, q);
  IceQuiver fq = freeze_vertex(q, k);
  json relabel = json::array();
  for (int v : freeze_relabeling(q, k)) relabel.push_back(v + 1);
  json out = {{"quiver", to_json(fq)}, {"relabeling", relabel}};
  if (req.contains("point")) {
    ModelPoint pt = point_from_json(req["point"]);
    require_valid(q, pt);
    ModelPoint fp = freeze_point(q, pt, k);
    out["point"] = to_json(fp);
    out["stabilizer"] = to_json(clusterdeep::stabilizer(fq, fp));
  }
  return out;
}

json explore(const json& req) {
  IceQuiver q = quiver_from_json(field(req, "quiver"));
  int depth = int_field(req, "max_depth", 4);
  int nodes = int_field(req, "max_nodes", 1000);
  if (depth < 0 || nodes < 1) throw InputError("max_depth must be >= 0 and max_nodes >= 1");
  ExplorationReport r = explore_seeds(q, depth, nodes);
  json ns = json::array();
  auto names = default_variable_names(q.size());
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    json cluster = json::array();
    if (i < r.clusters.size())
      for (const auto& x : r.clusters[i]) cluster.push_back(x.to_string(names));
    ns.push_back({{"word", word_to_json(r.words[i])}, {"depth", r.depth[i]}, {"quiver", to_json(r.nodes[i])},
                  {"cluster", cluster}});
  }
  json es = json::array();
  for (const auto& e : r.edges) es.push_back({e.from, e.k + 1, e.to});
  return {{"nodes", ns},
          {"edges", es},
          {"frontier_exhausted", r.frontier_exhausted},
          {"caps_hit", r.caps_hit},
          {"dot", to_dot(r)}};
}

json star3(const json& req) {
  int a = int_field(req, "a", 0), b = int_field(req, "b", 0);
  if (a < 1 || b < 1) throw InputError("'a' and 'b' must be positive integers");
  return to_json(star3_classify(a, b));
}

json gallery(const json& req) {
  std::string filter;
  if (req.is_object() && req.contains("filter")) filter = req["filter"].get<std::string>();
  GalleryReport r = run_gallery(filter);
  return {{"all_passed", r.all_passed}, {"entries", r.results}};
}

const std::map<std::string, Handler>& post_routes() {
  static const std::map<std::string, Handler> routes{
      {"/api/quiver/mutate", mutate},        {"/api/quiver/classify", classify},
      {"/api/dilation", dilation},           {"/api/stabilizer", stabilizer},
      {"/api/point/validate", validate},     {"/api/point/propagate", propagate},
      {"/api/deep/check", deep_check},       {"/api/tree-cover", tree_cover},
      {"/api/quiver/freeze", freeze},        {"/api/explore", explore},
      {"/api/star3", star3},
  };
  return routes;
}

Response dispatch(const Handler& h, const std::string& body) {
  try {
    json req = body.empty() ? json::object() : json::parse(body);
    return {200, h(req)};
  } catch (const json::exception& e) {
    return {400, {{"code", "InvalidJson"}, {"message", e.what()}, {"detail", json::object()}}};
  } catch (const InputError& e) {
    return {400, error_json(e)};
  } catch (const ResourceCap& e) {
    return {422, error_json(e)};
  } catch (const Error& e) {
    return {500, error_json(e)};
  } catch (const std::exception& e) {
    return {500, {{"code", "InternalError"}, {"message", e.what()}, {"detail", json::object()}}};
  }
}

Server::Server() : impl_(std::make_unique<httplib::Server>()) {
  auto reply = [](httplib::Response& res, const Response& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  for (const auto& [path, handler] : post_routes()) {
    Handler h = handler;
    impl_->Post(path, [h, reply](const httplib::Request& req, httplib::Response& res) { reply(res, dispatch(h, req.body)); });
  }
  impl_->Get("/api/gallery", [reply](const httplib::Request& req, httplib::Response& res) {
    json q = json::object();
    if (req.has_param("filter")) q["filter"] = req.get_param_value("filter");
    reply(res, dispatch(gallery, q.dump()));
  });
}

Server::~Server() = default;

int Server::bind(const std::string& host, int port) {
  if (port == 0) return impl_->bind_to_any_port(host);
  return impl_->bind_to_port(host, port) ? port : -1;
}

bool Server::run() { return impl_->listen_after_bind(); }

void Server::stop() { impl_->stop(); }

bool serve(const std::string& host, int port) {
  Server server;
  if (server.bind(host, port) < 0) return false;
  return server.run();
}

}  // namespace clusterdeep::api
