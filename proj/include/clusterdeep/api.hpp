#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>

#include "clusterdeep/json_io.hpp"

namespace httplib {
class Server;
}

namespace clusterdeep {

// Stateless JSON handlers. Each takes a request body and returns the response
// body; malformed input raises InputError (or a subclass). The HTTP layer
// only routes to these and serializes the result.
namespace api {

json mutate(const json& req);         // {quiver, k} or {quiver, word}
json classify(const json& req);       // {quiver}
json dilation(const json& req);       // {quiver}
json stabilizer(const json& req);     // {quiver, point}
json validate(const json& req);       // {quiver, point}
json propagate(const json& req);      // {quiver, point, word, witnesses?}
json deep_check(const json& req);     // {quiver, point, cert?, fork_cap?}
json tree_cover(const json& req);     // {quiver, point}
json freeze(const json& req);         // {quiver, k, point?}
json explore(const json& req);        // {quiver, max_depth?, max_nodes?}
json star3(const json& req);          // {a, b}
json gallery(const json& req);        // {filter?}

using Handler = std::function<json(const json&)>;

// POST routes keyed by path, e.g. "/api/quiver/mutate".
const std::map<std::string, Handler>& post_routes();

struct Response {
  int status = 200;
  json body;
};

// Runs a handler and maps errors: InputError -> 400, ResourceCap -> 422,
// anything else -> 500, each with an {code, message, detail} body.
Response dispatch(const Handler& h, const std::string& body);

// HTTP front end over post_routes() plus GET /api/gallery?filter=.
class Server {
 public:
  Server();
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  // Port 0 picks a free port. Returns the bound port, or -1 on failure.
  int bind(const std::string& host, int port);
  // Blocks until stop() is called.
  bool run();
  void stop();

 private:
  std::unique_ptr<httplib::Server> impl_;
};

// Blocks serving on host:port. Returns false if binding fails.
bool serve(const std::string& host, int port);

}  // namespace api

}  // namespace clusterdeep
