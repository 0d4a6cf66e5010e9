#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "clusterdeep/dilation.hpp"
#include "clusterdeep/point.hpp"
#include "clusterdeep/quiver.hpp"
#include "clusterdeep/variety.hpp"
#include "clusterdeep/witness.hpp"

namespace clusterdeep {

// Outcome of the constructive cover for quivers whose mutable part is a tree:
// either a mutation word whose cluster torus contains the point (with the
// identities needed to transport values to it), or an explicit nontrivial
// element of the stabilizer.
struct TreeCoverResult {
  bool in_torus = false;
  MutationWord word;
  std::vector<Witness> witnesses;

  // Set when in_torus is false. `element` is in the coordinates of the
  // initial seed; `chart_element` in those of the seed at `element_word`.
  std::optional<StabilizerElement> element;
  std::optional<StabilizerElement> chart_element;
  MutationWord element_word;

  std::vector<std::string> trace;
};

// Requires a valid point and a tree mutable part with simple edges. Frozen
// rows may be arbitrary. Throws InputError("NotTree") otherwise.
TreeCoverResult tree_cover(const IceQuiver& q, const ModelPoint& pt);

struct CoverCheck {
  bool ok = false;
  std::string message;
};

// Independent replay: every witness is verified symbolically, the point is
// propagated along the word using only those witnesses and must land in the
// torus; or the element must satisfy the stabilizer constraints of the
// original point and be nontrivial.
CoverCheck verify_cover(const IceQuiver& q, const ModelPoint& pt, const TreeCoverResult& r);

// Sink/source flips turning the orientation of a tree's mutable part into a
// bipartite one (every vertex a sink or a source). Empty if already so.
MutationWord sink_source_word(const IceQuiver& q);

// Tree on n mutable vertices with bipartite orientation, vertices with
// `source_color` parity sources, and one frozen vertex per mutable vertex:
// i -> i_bar for sources and i_bar -> i for sinks. Vertex i_bar is n + i.
IceQuiver reduced_tree(int n, const std::vector<std::pair<int, int>>& edges, int source_color = 0);

// Reduced form of any tree quiver: flips to bipartite orientation and
// replaces the frozen rows as above.
IceQuiver reduce_tree_form(const IceQuiver& q);

// Uniformly random labelled tree edges on n vertices (Pruefer code).
std::vector<std::pair<int, int>> random_tree_edges(int n, std::mt19937_64& rng);

}  // namespace clusterdeep
