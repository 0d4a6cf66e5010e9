#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "clusterdeep/api.hpp"
#include "clusterdeep/gallery.hpp"
#include "clusterdeep/suites.hpp"

using namespace clusterdeep;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;
constexpr int kResourceCap = 3;

struct Options {
  std::string quiver, point, word, cert, witnesses, filter, host = "127.0.0.1";
  int max_depth = 4;
  int max_nodes = 1000;
  int fork_cap = 10000;
  int port = 8080;
  int a = 0, b = 0;
  int count = 500;
  int max_n = 6;
  std::uint64_t seed = 20240601;
  bool dot = false;
};

json request(const Options& o, bool need_point) {
  json req = json::object();
  if (o.quiver.empty()) throw InputError("--quiver is required");
  req["quiver"] = read_json_file(o.quiver);
  if (need_point) {
    if (o.point.empty()) throw InputError("--point is required");
    req["point"] = read_json_file(o.point);
  }
  if (!o.word.empty()) req["word"] = o.word;
  return req;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

int suite_exit(const SuiteReport& r, const char* name) {
  json j = {{"suite", name},
            {"instances", r.instances},
            {"checks", r.checks},
            {"in_torus", r.in_torus},
            {"other", r.deep},
            {"failures", r.failures},
            {"passed", r.ok()}};
  print(j);
  return r.ok() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cluster algebra engine: mutation, dilation groups, deep and mysterious points"};
  app.require_subcommand(1);
  Options o;

  auto quiver_opt = [&](CLI::App* c) { c->add_option("--quiver", o.quiver, "Quiver JSON file")->check(CLI::ExistingFile); };
  auto point_opt = [&](CLI::App* c) { c->add_option("--point", o.point, "Point JSON file")->check(CLI::ExistingFile); };

  auto* classify = app.add_subcommand("classify", "Classification badges, gcd vector, keys, forks, dilation group");
  quiver_opt(classify);
  auto* mutate = app.add_subcommand("mutate", "Mutate a quiver along a word");
  quiver_opt(mutate);
  mutate->add_option("--word", o.word, "Mutation word, e.g. \"1,2,1\"")->required();
  auto* dilation = app.add_subcommand("dilation", "Dilation equations and group structure");
  quiver_opt(dilation);
  auto* stab = app.add_subcommand("stabilizer", "Stabilizer of a point");
  quiver_opt(stab);
  point_opt(stab);
  auto* validate = app.add_subcommand("validate", "Check the exchange relations at a point");
  quiver_opt(validate);
  point_opt(validate);
  auto* propagate = app.add_subcommand("propagate", "Push a point through a mutation word");
  quiver_opt(propagate);
  point_opt(propagate);
  propagate->add_option("--word", o.word, "Mutation word");
  propagate->add_option("--witnesses", o.witnesses, "JSON file with an array of witnesses")->check(CLI::ExistingFile);
  auto* deep = app.add_subcommand("deep-check", "Deep-point verdict with certificate or cover");
  auto* myst = app.add_subcommand("mysterious-check", "Mysterious verdict (deep with trivial stabilizer)");
  for (auto* c : {deep, myst}) {
    quiver_opt(c);
    point_opt(c);
    c->add_option("--cert", o.cert, "Certificate kind")->check(CLI::IsMember({"gcd-star", "key", "abundant", "fork"}));
    c->add_option("--fork-cap", o.fork_cap, "Node cap for the fork-less enumeration");
  }
  auto* tree = app.add_subcommand("tree-cover", "Constructive cover or stabilizer element for tree quivers");
  quiver_opt(tree);
  point_opt(tree);
  auto* star3 = app.add_subcommand("star3", "Verdict for the star with companion frozens");
  star3->add_option("a", o.a, "Weight of 3 -> 1")->required();
  star3->add_option("b", o.b, "Weight of 2 -> 1")->required();
  auto* explore = app.add_subcommand("explore", "Breadth-first seed exploration");
  quiver_opt(explore);
  explore->add_option("--max-depth", o.max_depth, "Depth cap");
  explore->add_option("--max-nodes", o.max_nodes, "Node cap");
  explore->add_flag("--dot", o.dot, "Print Graphviz DOT instead of JSON");
  auto* gallery = app.add_subcommand("gallery", "Run the pinned example gallery");
  gallery->add_option("filter", o.filter, "Only entries whose id contains this");
  auto* trees = app.add_subcommand("tree-suite", "Randomized tree-cover dichotomy suite");
  trees->add_option("--count", o.count, "Number of trees");
  trees->add_option("--max-n", o.max_n, "Largest number of mutable vertices")->check(CLI::Range(1, 12));
  trees->add_option("--seed", o.seed, "RNG seed");
  auto* lift = app.add_subcommand("frozen-lift-suite", "Randomized frozen-lift suite");
  lift->add_option("--count", o.count, "Number of instances");
  lift->add_option("--seed", o.seed, "RNG seed");
  auto* serve = app.add_subcommand("serve", "HTTP JSON service");
  serve->add_option("--port", o.port, "Port")->check(CLI::Range(1, 65535));
  serve->add_option("--host", o.host, "Bind address");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*classify) print(api::classify(request(o, false)));
    else if (*mutate) print(api::mutate(request(o, false)));
    else if (*dilation) print(api::dilation(request(o, false)));
    else if (*stab) print(api::stabilizer(request(o, true)));
    else if (*validate) {
      json r = api::validate(request(o, true));
      print(r);
      return r["valid"].get<bool>() ? kOk : kMismatch;
    } else if (*propagate) {
      json req = request(o, true);
      if (!o.witnesses.empty()) req["witnesses"] = read_json_file(o.witnesses);
      print(api::propagate(req));
    } else if (*deep || *myst) {
      json req = request(o, true);
      if (!o.cert.empty()) req["cert"] = o.cert;
      req["fork_cap"] = o.fork_cap;
      json r = api::deep_check(req);
      print(*deep ? r["deep"] : r);
    } else if (*tree) {
      json r = api::tree_cover(request(o, true));
      print(r);
      return r["verified"].get<bool>() ? kOk : kMismatch;
    } else if (*star3) {
      json r = api::star3({{"a", o.a}, {"b", o.b}});
      print(r);
      return r["evidence_ok"].get<bool>() ? kOk : kMismatch;
    } else if (*explore) {
      json r = api::explore({{"quiver", read_json_file(o.quiver)}, {"max_depth", o.max_depth}, {"max_nodes", o.max_nodes}});
      if (o.dot) std::cout << r["dot"].get<std::string>();
      else {
        r.erase("dot");
        print(r);
      }
    } else if (*gallery) {
      auto start = std::chrono::steady_clock::now();
      GalleryReport r = run_gallery(o.filter);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      for (const auto& e : r.results)
        std::cout << (e["passed"].get<bool>() ? "PASS " : "FAIL ") << e["id"].get<std::string>() << "  ("
                  << e["basis"].get<std::string>() << ")\n";
      if (!r.all_passed)
        for (const auto& e : r.results)
          if (!e["passed"].get<bool>()) std::cout << e["id"].get<std::string>() << ": " << e["detail"].dump() << "\n";
      std::cout << r.results.size() << " entries, " << (r.all_passed ? "all passed" : "FAILURES") << " in " << secs
                << " s\n";
      return r.all_passed ? kOk : kMismatch;
    } else if (*trees) {
      return suite_exit(tree_suite(o.count, o.max_n, o.seed), "tree-cover");
    } else if (*lift) {
      return suite_exit(frozen_lift_suite(o.count, o.seed), "frozen-lift");
    } else if (*serve) {
      std::cerr << "listening on " << o.host << ":" << o.port << "\n";
      if (!api::serve(o.host, o.port)) {
        std::cerr << "could not bind " << o.host << ":" << o.port << "\n";
        return kInputError;
      }
    }
  } catch (const ResourceCap& e) {
    std::cout << error_json(e).dump(2) << "\n";
    return kResourceCap;
  } catch (const InputError& e) {
    std::cout << error_json(e).dump(2) << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cout << error_json(e).dump(2) << "\n";
    return kMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kOk;
}
