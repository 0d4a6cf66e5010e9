#pragma once

#include "json.hpp"
#include <string>

#include "clusterdeep/deep.hpp"
#include "clusterdeep/dilation.hpp"
#include "clusterdeep/errors.hpp"
#include "clusterdeep/point.hpp"
#include "clusterdeep/quiver.hpp"
#include "clusterdeep/tree_cover.hpp"
#include "clusterdeep/variety.hpp"
#include "clusterdeep/witness.hpp"

namespace clusterdeep {

using json = nlohmann::json;

// Wire formats use 1-based vertex labels throughout.
//   quiver:  {"n": 3, "m": 0, "arrows": [[2, 1, 3], [3, 1, 2]]}
//   point:   {"p": ["0","-1","1"], "p_prime": [...], "frozen": [...]}
//   word:    [2, 1] or "2,1"
//   laurent: [{"c": "3", "e": [1, 0, -2]}, ...]
json to_json(const IceQuiver& q);
IceQuiver quiver_from_json(const json& j);

json to_json(const ModelPoint& pt);
ModelPoint point_from_json(const json& j);

json word_to_json(const MutationWord& w);
MutationWord word_from_json(const json& j);
MutationWord parse_word(const std::string& s);

json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j, int nvars);

json to_json(const Witness& w, int n, int m);
Witness witness_from_json(const json& j, int n, int m);

json to_json(const GroupStructure& g);
json to_json(const StabilizerElement& e);
json to_json(const Classification& c);
json to_json(const Certificate& c);
json to_json(const DeepVerdict& v, const IceQuiver& q);
json to_json(const MysteryVerdict& v, const IceQuiver& q);
json to_json(const TreeCoverResult& r, const IceQuiver& q);
json to_json(const Star3Report& r);
json values_to_json(const std::vector<Value>& v);

json error_json(const Error& e);

// Reads a JSON document from a file; throws InputError on I/O or parse errors.
json read_json_file(const std::string& path);

}  // namespace clusterdeep
