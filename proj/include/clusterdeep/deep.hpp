#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clusterdeep/dilation.hpp"
#include "clusterdeep/mutation_graph.hpp"
#include "clusterdeep/point.hpp"
#include "clusterdeep/quiver.hpp"
#include "clusterdeep/variety.hpp"
#include "clusterdeep/witness.hpp"

namespace clusterdeep {

// Evidence that |b'_{1i}| >= 2 for i = 2..n in every seed mutation
// equivalent to q (vertex 1 is index 0).
enum class CertKind { GcdStar, Key, AbundantAcyclic, ForkBounded };
std::string to_string(CertKind k);
CertKind parse_cert_kind(const std::string& s);  // "gcd-star", "key", "abundant", "fork"

struct Certificate {
  CertKind kind = CertKind::GcdStar;
  GcdVector gcd;                 // GcdStar
  std::optional<KeyPair> key;    // Key
  int cap = 0;                   // ForkBounded
  std::size_t forkless_size = 0; // ForkBounded
  std::string evidence;
};

// Mutable part must be a 3-vertex star with centre 1 (arrows 2 -> 1 and
// 3 -> 1, none between 2 and 3); throws WrongShape otherwise.
std::optional<Certificate> cert_gcd_star(const IceQuiver& q);
std::optional<Certificate> cert_key(const IceQuiver& q);
std::optional<Certificate> cert_abundant_acyclic(const IceQuiver& q);
// `reason` receives why no certificate was produced.
std::optional<Certificate> cert_fork_bounded(const IceQuiver& q, int cap, std::string* reason = nullptr);

// Runs the certificate of the given kind; GcdStar returns nullopt instead of
// throwing on other shapes.
std::optional<Certificate> find_certificate(const IceQuiver& q, CertKind kind, int fork_cap = 10000);

struct DeepVerdict {
  enum class Kind { Deep, DeepByStabilizer, InTorus, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<Certificate> certificate;      // Deep
  std::optional<StabilizerElement> element;    // DeepByStabilizer
  GroupStructure stabilizer;                   // DeepByStabilizer
  MutationWord word;                           // InTorus
  std::vector<Witness> witnesses;              // InTorus
  std::string reason;
};
std::string to_string(DeepVerdict::Kind k);

// Deep(cert) iff x_1 = x'_1 = 0, every other x_j != 0 and the certificate of
// `kind` applies to q. Throws InvalidPoint on an invalid point.
DeepVerdict so_may_deep(const IceQuiver& q, const ModelPoint& pt, CertKind kind, int fork_cap = 10000);

// Point of rank2_quiver(a), following the case split of the rank-2 argument.
DeepVerdict rank2_classify(std::int64_t a, const ModelPoint& pt);

// A stabilizer generator of nonzero order or dimension, if any.
std::optional<StabilizerElement> nontrivial_stabilizer_element(const IceQuiver& q, const ModelPoint& pt);

// Bounded search through the seeds reachable by words of length <= depth,
// transporting values with the two-step identity where needed.
std::optional<std::pair<MutationWord, std::vector<Witness>>> search_cover(const IceQuiver& q, const ModelPoint& pt,
                                                                          int depth);

// General verdict: torus membership in the initial seed or a one-step
// neighbour, nontrivial stabilizer, certificate (with the distinguished
// vertex moved to 1 when the zero set is a single other vertex), tree cover,
// bounded search, else Unknown.
DeepVerdict deep_check(const IceQuiver& q, const ModelPoint& pt, std::optional<CertKind> kind = std::nullopt,
                       int fork_cap = 10000);

struct MysteryVerdict {
  bool mysterious = false;
  DeepVerdict verdict;
  GroupStructure stabilizer;
  std::string explanation;
};

MysteryVerdict is_mysterious(const IceQuiver& q, const ModelPoint& pt, std::optional<CertKind> kind = std::nullopt,
                             int fork_cap = 10000);

// Family-level verdict for star3_quiver(a, b), backed by checks at sampled
// points rather than a replay of the full argument.
struct Star3Report {
  bool has_mysterious = false;
  std::string branch;  // "min=1", "gcd>1" or "coprime"
  std::optional<Witness> witness;
  MutationWord cover_word;
  std::vector<std::string> checks;
  std::vector<StabilizerElement> elements;
  std::optional<ModelPoint> mysterious_point;
  bool evidence_ok = false;
};

Star3Report star3_classify(std::int64_t a, std::int64_t b);

// Point with vertices relabelled by perm (old -> new), mutable only.
ModelPoint relabel_point(const ModelPoint& pt, const std::vector<int>& perm, int n);

}  // namespace clusterdeep
