#include "clusterdeep/json_io.hpp"

#include <fstream>
#include <sstream>

namespace clusterdeep {

namespace {

int get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw InputError(std::string("field '") + key + "' must be an integer");
  return j[key].get<int>();
}

Rational rational_from(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw InputError("expected a rational as a string \"a/b\" or an integer");
}

std::vector<Rational> rationals(const json& j, const char* key) {
  std::vector<Rational> out;
  if (!j.contains(key)) return out;
  if (!j[key].is_array()) throw InputError(std::string("field '") + key + "' must be an array");
  for (const auto& v : j[key]) out.push_back(rational_from(v));
  return out;
}

json rationals_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(to_string(r));
  return a;
}

json exponents_json(const std::vector<mpz_class>& v) {
  json a = json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p()) a.push_back(x.get_si());
    else a.push_back(x.get_str());
  }
  return a;
}

}  // namespace

json to_json(const IceQuiver& q) {
  json arrows = json::array();
  for (const auto& a : q.arrows()) arrows.push_back({a.from + 1, a.to + 1, a.weight});
  return {{"n", q.n()}, {"m", q.m()}, {"arrows", arrows}};
}

IceQuiver quiver_from_json(const json& j) {
  if (!j.is_object()) throw InputError("quiver must be a JSON object");
  const int n = get_int(j, "n");
  const int m = j.contains("m") ? get_int(j, "m") : 0;
  if (n < 0 || m < 0) throw InputError("n and m must be non-negative");
  if (n + m > 4096) throw InputError("quiver too large");
  std::vector<IceQuiver::Arrow> arrows;
  if (j.contains("arrows")) {
    if (!j["arrows"].is_array()) throw InputError("'arrows' must be an array");
    for (const auto& a : j["arrows"]) {
      if (!a.is_array() || a.size() < 2 || a.size() > 3)
        throw InputError("each arrow must be [from, to] or [from, to, weight]");
      for (const auto& x : a)
        if (!x.is_number_integer()) throw InputError("arrow entries must be integers");
      int from = a[0].get<int>(), to = a[1].get<int>();
      std::int64_t w = a.size() == 3 ? a[2].get<std::int64_t>() : 1;
      if (from < 1 || to < 1 || from > n + m || to > n + m) throw InputError("arrow endpoint out of range");
      arrows.push_back({from - 1, to - 1, w});
    }
  }
  return IceQuiver::from_arrows(n, m, arrows);
}

json to_json(const ModelPoint& pt) {
  return {{"p", rationals_json(pt.p)}, {"p_prime", rationals_json(pt.p_prime)}, {"frozen", rationals_json(pt.frozen)}};
}

ModelPoint point_from_json(const json& j) {
  if (!j.is_object()) throw InputError("point must be a JSON object");
  ModelPoint pt;
  pt.p = rationals(j, "p");
  pt.p_prime = rationals(j, "p_prime");
  pt.frozen = rationals(j, "frozen");
  return pt;
}

json word_to_json(const MutationWord& w) {
  json a = json::array();
  for (int k : w) a.push_back(k + 1);
  return a;
}

MutationWord word_from_json(const json& j) {
  if (j.is_string()) return parse_word(j.get<std::string>());
  if (!j.is_array()) throw InputError("word must be an array of vertex labels");
  MutationWord w;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<int>() < 1) throw InputError("word letters must be positive integers");
    w.push_back(x.get<int>() - 1);
  }
  return w;
}

MutationWord parse_word(const std::string& s) {
  MutationWord w;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto b = tok.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    tok = tok.substr(b, tok.find_last_not_of(" \t") - b + 1);
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw InputError("bad word letter '" + tok + "'");
    }
    if (used != tok.size() || k < 1) throw InputError("bad word letter '" + tok + "'");
    w.push_back(k - 1);
  }
  return w;
}

json to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"c", c.get_str()}, {"e", e}});
  return terms;
}

LaurentPoly laurent_from_json(const json& j, int nvars) {
  if (!j.is_array()) throw InputError("polynomial must be an array of terms");
  LaurentPoly p(nvars);
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("c") || !t.contains("e") || !t["e"].is_array())
      throw InputError("term must be {\"c\": coefficient, \"e\": exponents}");
    mpz_class c;
    if (t["c"].is_string()) {
      if (c.set_str(t["c"].get<std::string>(), 10) != 0) throw InputError("bad coefficient");
    } else if (t["c"].is_number_integer()) {
      c = t["c"].get<long>();
    } else {
      throw InputError("bad coefficient");
    }
    Exponent e;
    for (const auto& x : t["e"]) {
      if (!x.is_number_integer()) throw InputError("exponents must be integers");
      e.push_back(x.get<std::int32_t>());
    }
    if (static_cast<int>(e.size()) != nvars)
      throw InputError("term has " + std::to_string(e.size()) + " exponents, expected " + std::to_string(nvars));
    p.add_term(e, c);
  }
  return p;
}

json to_json(const Witness& w, int n, int m) {
  auto names = chart_generator_names(n, m);
  return {{"base_word", word_to_json(w.base_word)},
          {"target_word", word_to_json(w.target_word)},
          {"vertex", w.vertex + 1},
          {"numerator", to_json(w.numerator)},
          {"denominator", to_json(w.denominator)},
          {"text", w.to_string(n, m)}};
}

Witness witness_from_json(const json& j, int n, int m) {
  if (!j.is_object()) throw InputError("witness must be an object");
  Witness w;
  w.base_word = j.contains("base_word") ? word_from_json(j["base_word"]) : MutationWord{};
  if (!j.contains("target_word")) throw InputError("witness needs 'target_word'");
  w.target_word = word_from_json(j["target_word"]);
  w.vertex = get_int(j, "vertex") - 1;
  if (!j.contains("numerator") || !j.contains("denominator"))
    throw InputError("witness needs 'numerator' and 'denominator'");
  w.numerator = laurent_from_json(j["numerator"], 2 * n + m);
  w.denominator = laurent_from_json(j["denominator"], 2 * n + m);
  return w;
}

json to_json(const GroupStructure& g) {
  json t = json::array();
  for (const auto& d : g.torsion) t.push_back(d.get_str());
  return {{"torus_rank", g.torus_rank}, {"torsion", t}, {"trivial", g.trivial()}, {"text", g.to_string()}};
}

json to_json(const StabilizerElement& e) {
  json j = {{"kind", e.kind == StabilizerElement::Kind::OneParameter ? "one_parameter" : "torsion"},
            {"exponents", exponents_json(e.exponents)},
            {"text", e.to_string()}};
  if (e.kind == StabilizerElement::Kind::Torsion) {
    j["order"] = e.order.get_str();
    j["element_order"] = e.element_order().get_str();
  }
  return j;
}

json to_json(const Classification& c) {
  return {{"acyclic", c.acyclic},
          {"tree", c.tree_mutable},
          {"sink_source", c.sink_source_form},
          {"abundant", c.abundant},
          {"really_full_rank", c.really_full_rank}};
}

json to_json(const Certificate& c) {
  json j = {{"kind", to_string(c.kind)}, {"evidence", c.evidence}};
  if (!c.gcd.empty()) j["gcd_vector"] = c.gcd;
  if (c.key) j["key_pair"] = {c.key->k + 1, c.key->k2 + 1};
  if (c.kind == CertKind::ForkBounded) {
    j["cap"] = c.cap;
    j["forkless_size"] = c.forkless_size;
  }
  return j;
}

json to_json(const DeepVerdict& v, const IceQuiver& q) {
  json j = {{"verdict", to_string(v.kind)}, {"reason", v.reason}};
  if (v.certificate) j["certificate"] = to_json(*v.certificate);
  if (v.kind == DeepVerdict::Kind::DeepByStabilizer) {
    if (v.element) j["element"] = to_json(*v.element);
    j["stabilizer"] = to_json(v.stabilizer);
  }
  if (v.kind == DeepVerdict::Kind::InTorus) {
    j["word"] = word_to_json(v.word);
    json ws = json::array();
    for (const auto& w : v.witnesses) ws.push_back(to_json(w, q.n(), q.m()));
    j["witnesses"] = ws;
  }
  return j;
}

json to_json(const MysteryVerdict& v, const IceQuiver& q) {
  return {{"mysterious", v.mysterious},
          {"verdict", v.mysterious ? "Mysterious" : "NotMysterious"},
          {"explanation", v.explanation},
          {"stabilizer", to_json(v.stabilizer)},
          {"deep", to_json(v.verdict, q)}};
}

json to_json(const TreeCoverResult& r, const IceQuiver& q) {
  json j = {{"verdict", r.in_torus ? "InTorus" : "DeepByStabilizer"}, {"trace", r.trace}};
  if (r.in_torus) {
    j["word"] = word_to_json(r.word);
    json ws = json::array();
    for (const auto& w : r.witnesses) ws.push_back(to_json(w, q.n(), q.m()));
    j["witnesses"] = ws;
  } else {
    if (r.element) j["element"] = to_json(*r.element);
    if (r.chart_element) j["chart_element"] = to_json(*r.chart_element);
    j["element_word"] = word_to_json(r.element_word);
  }
  return j;
}

json to_json(const Star3Report& r) {
  json j = {{"verdict", r.has_mysterious ? "HasMysterious" : "NoMysterious"},
            {"branch", r.branch},
            {"checks", r.checks},
            {"evidence_ok", r.evidence_ok}};
  if (r.witness) j["witness"] = to_json(*r.witness, 3, 3);
  if (!r.cover_word.empty()) j["cover_word"] = word_to_json(r.cover_word);
  json es = json::array();
  for (const auto& e : r.elements) es.push_back(to_json(e));
  j["elements"] = es;
  if (r.mysterious_point) j["point"] = to_json(*r.mysterious_point);
  return j;
}

json values_to_json(const std::vector<Value>& v) {
  json a = json::array();
  for (const auto& x : v) {
    if (x) a.push_back(to_string(*x));
    else a.push_back(nullptr);
  }
  return a;
}

json error_json(const Error& e) {
  return {{"code", e.code()}, {"message", e.what()}, {"detail", json::object()}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace clusterdeep
