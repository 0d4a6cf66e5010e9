#pragma once

#include <functional>
#include <string>
#include <vector>

#include "clusterdeep/json_io.hpp"

namespace clusterdeep {

struct GalleryOutcome {
  bool passed = false;
  json detail;
};

// One pinned example run end to end. `basis` says where the expectation comes
// from: "worked example" (a value printed in the source material), "derived"
// (computed by hand from the definitions), or "record" (outcome stored, not
// asserted).
struct GalleryEntry {
  std::string id;
  std::string topic;
  std::string basis;
  std::function<GalleryOutcome()> run;
};

const std::vector<GalleryEntry>& gallery_entries();

struct GalleryReport {
  bool all_passed = true;
  json results;  // array of {id, topic, basis, passed, detail}
};

// Runs every entry whose id contains `filter` (all when empty). An entry that
// throws counts as failed.
GalleryReport run_gallery(const std::string& filter = "");

// Torus membership of the point in the seed reached by `word`, deriving the
// two-step identities where a value is otherwise undetermined; every derived
// identity is verified symbolically before it is trusted.
Membership derived_membership(const IceQuiver& q, const ModelPoint& pt, const MutationWord& word);

}  // namespace clusterdeep
