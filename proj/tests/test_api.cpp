#include "doctest.h"

#include <chrono>
#include <thread>

#include "httplib.h"

#include "clusterdeep/api.hpp"
#include "clusterdeep/families.hpp"
#include "clusterdeep/gallery.hpp"

using namespace clusterdeep;

namespace {

json star_request() {
  return {{"quiver", to_json(star_quiver(2, 3))},
          {"point", {{"p", {"0", "-1", "1"}}, {"p_prime", {"0", "-1", "1"}}, {"frozen", json::array()}}}};
}

}  // namespace

TEST_CASE("JSON round trips") {
  IceQuiver q = star3_quiver(2, 3);
  CHECK(quiver_from_json(to_json(q)) == q);
  ModelPoint pt{{Rational(0), Rational(1, 2)}, {Rational(-3), Rational(4)}, {}};
  CHECK(point_from_json(to_json(pt)) == pt);
  CHECK(word_from_json(json("2, 1,3")) == MutationWord{1, 0, 2});
  CHECK(word_from_json(word_to_json({0, 2})) == MutationWord{0, 2});
  auto w = two_step_witness(a2_quiver(), {}, 0, 1);
  REQUIRE(w.has_value());
  CHECK(witness_from_json(to_json(*w, 2, 0), 2, 0) == *w);
}

TEST_CASE("malformed input is an InputError") {
  CHECK_THROWS_AS(quiver_from_json(json{{"n", 2}, {"arrows", {{1, 3}}}}), InputError);
  CHECK_THROWS_AS(quiver_from_json(json{{"arrows", json::array()}}), InputError);
  CHECK_THROWS_AS(quiver_from_json(json{{"n", 2}, {"arrows", {{1, "x"}}}}), InputError);
  CHECK_THROWS_AS(word_from_json(json("1,a")), InputError);
  CHECK_THROWS_AS(word_from_json(json{0}), InputError);
  CHECK_THROWS_AS(point_from_json(json{{"p", {"1/0"}}}), InputError);
}

TEST_CASE("mutate handler reverses the A2 arrow") {
  json r = api::mutate({{"quiver", to_json(a2_quiver())}, {"k", 1}});
  CHECK(r["quiver"]["arrows"] == json{{2, 1, 1}});
  json w = api::mutate({{"quiver", to_json(a2_quiver())}, {"word", "1,2"}});
  CHECK(quiver_from_json(w["quiver"]) == mutate(a2_quiver(), {0, 1}));
  CHECK_THROWS_AS(api::mutate({{"quiver", to_json(a2_quiver())}, {"k", 3}}), InputError);
}

TEST_CASE("classify and dilation handlers") {
  json c = api::classify({{"quiver", to_json(star_quiver(2, 3))}});
  CHECK(c["acyclic"] == true);
  CHECK(c["gcd_vector"] == json{1, 3, 2});
  CHECK(c["key"].is_array());
  CHECK(c["fork"].is_null());
  json d = api::dilation({{"quiver", to_json(star_quiver(2, 3))}});
  CHECK(d["group"]["torus_rank"] == 1);
  CHECK(d["equations"].size() == 3);
}

TEST_CASE("point handlers") {
  json v = api::validate(star_request());
  CHECK(v["valid"] == true);
  CHECK(v["stratum"] == json{1});
  json s = api::stabilizer(star_request());
  CHECK(s["group"]["trivial"] == true);
  json req = star_request();
  req["word"] = "2";
  json p = api::propagate(req);
  CHECK(p["membership"] == "NotInTorus");
}

TEST_CASE("deep check on the (2,3) star point") {
  json r = api::deep_check(star_request());
  CHECK(r["verdict"] == "Mysterious");
  CHECK(r["deep"]["certificate"]["kind"] == "GcdStar");
}

TEST_CASE("freeze handler shows the acquired stabilizer") {
  json req = star_request();
  req["k"] = 2;
  json r = api::freeze(req);
  CHECK(r["stabilizer"]["trivial"] == false);
  CHECK(r["quiver"]["n"] == 2);
}

TEST_CASE("tree-cover handler verifies its output") {
  IceQuiver q = reduced_tree(3, {{0, 1}, {1, 2}});
  std::mt19937_64 rng(81);
  auto pt = random_stratum_point(q, {0, 2}, rng);
  REQUIRE(pt.has_value());
  json r = api::tree_cover({{"quiver", to_json(q)}, {"point", to_json(*pt)}});
  CHECK(r["verified"] == true);
}

TEST_CASE("dispatch maps errors to status codes") {
  api::Response bad_json = api::dispatch(api::classify, "{not json");
  CHECK(bad_json.status == 400);
  CHECK(bad_json.body.contains("code"));
  api::Response bad_quiver = api::dispatch(api::classify, R"({"quiver": {"n": 2, "arrows": [[1, 1]]}})");
  CHECK(bad_quiver.status == 400);
  CHECK(bad_quiver.body["code"] == "InvalidInput");
  CHECK(bad_quiver.body.contains("detail"));
  api::Response cyclic = api::dispatch(
      api::validate, json{{"quiver", to_json(cyclic_triangle(3, 4, 5))},
                          {"point", {{"p", {1, 1, 1}}, {"p_prime", {1, 1, 1}}}}}.dump());
  CHECK(cyclic.status == 400);
  CHECK(cyclic.body["code"] == "NotAcyclic");
}

TEST_CASE("live server answers exactly like the handlers") {
  api::Server srv;
  const int port = srv.bind("127.0.0.1", 0);
  REQUIRE(port > 0);
  std::thread runner([&srv] { srv.run(); });
  struct Stop {
    api::Server& s;
    std::thread& t;
    ~Stop() {
      s.stop();
      t.join();
    }
  } stop{srv, runner};

  httplib::Client client("127.0.0.1", port);
  client.set_read_timeout(30);
  bool up = false;
  for (int i = 0; i < 100 && !up; ++i) {
    if (auto res = client.Get("/api/gallery?filter=star-2-3-dilation")) up = res->status == 200;
    else std::this_thread::sleep_for(std::chrono::milliseconds(20));
  }
  REQUIRE(up);

  auto res = client.Post("/api/deep/check", star_request().dump(), "application/json");
  REQUIRE_MESSAGE(res, httplib::to_string(res.error()));
  CHECK(res->status == 200);
  CHECK(res->body == api::deep_check(star_request()).dump());

  json mreq = {{"quiver", to_json(a2_quiver())}, {"k", 1}};
  auto m = client.Post("/api/quiver/mutate", mreq.dump(), "application/json");
  REQUIRE(m);
  CHECK(m->body == api::mutate(mreq).dump());

  auto bad = client.Post("/api/quiver/classify", R"({"quiver": {"n": "two"}})", "application/json");
  REQUIRE(bad);
  CHECK(bad->status == 400);

  auto g = client.Get("/api/gallery?filter=a2");
  REQUIRE(g);
  json gj = json::parse(g->body);
  CHECK(gj["all_passed"] == true);
  CHECK(gj["entries"].size() == 1);
}

TEST_CASE("gallery filter") {
  GalleryReport all = run_gallery();
  CHECK(all.all_passed);
  CHECK(all.results.size() == gallery_entries().size());
  CHECK(run_gallery("no-such-entry").results.empty());
}
