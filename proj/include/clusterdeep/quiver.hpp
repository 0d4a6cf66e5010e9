#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace clusterdeep {

// An ice quiver stored as its extended exchange matrix.
//
// Vertices 0..n-1 are mutable, n..n+m-1 frozen. The matrix has n+m rows and
// n columns; b(i, k) is the number of arrows i -> k minus the number of arrows
// k -> i. The top n x n block is skew-symmetric. Frozen vertices have no
// column, so arrows between two frozen vertices cannot be represented.
//
// All indices in the C++ API are 0-based. The JSON and CLI layers use 1-based
// labels.
class IceQuiver {
 public:
  IceQuiver() = default;
  IceQuiver(int n, int m);

  struct Arrow {
    int from;
    int to;
    std::int64_t weight;
  };

  // Builds a quiver from 0-based arrows. Rejects loops, 2-cycles, duplicate
  // records, non-positive weights and frozen-frozen arrows.
  static IceQuiver from_arrows(int n, int m, const std::vector<Arrow>& arrows);

  // Builds a quiver from row-major (n+m) x n entries. The mutable block must
  // be skew-symmetric.
  static IceQuiver from_matrix(int n, int m, std::vector<std::int64_t> entries);

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  int size() const noexcept { return n_ + m_; }

  // Extended exchange matrix entry; requires k < n.
  std::int64_t b(int i, int k) const { return b_[static_cast<std::size_t>(i) * n_ + k]; }

  // Signed arrow count between any two vertices (0 between two frozens).
  std::int64_t entry(int i, int j) const;

  // Sets the arrow count i -> j (negative means j -> i), keeping the mutable
  // block skew-symmetric. At least one endpoint must be mutable.
  void set_entry(int i, int j, std::int64_t value);

  const std::vector<std::int64_t>& entries() const noexcept { return b_; }

  std::vector<Arrow> arrows() const;

  // Column k of the matrix, i.e. the exponents of the exchange binomial at k.
  std::vector<std::int64_t> column(int k) const;

  bool is_mutable(int v) const noexcept { return v >= 0 && v < n_; }

  friend bool operator==(const IceQuiver&, const IceQuiver&) = default;
  friend auto operator<=>(const IceQuiver& a, const IceQuiver& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.m_ <=> b.m_; c != 0) return c;
    return a.b_ <=> b.b_;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::int64_t> b_;
};

// Mutation at mutable vertex k. Throws InputError if k is out of range or
// frozen, ResourceCap if an entry overflows 64 bits.
IceQuiver mutate(const IceQuiver& q, int k);

IceQuiver mutate(const IceQuiver& q, const std::vector<int>& word);

// d_i = gcd of mutable row i of the mutable block (0 for an all-zero row).
using GcdVector = std::vector<std::int64_t>;
GcdVector gcd_vector(const IceQuiver& q);

struct Classification {
  bool acyclic = false;
  bool tree_mutable = false;
  bool sink_source_form = false;
  bool abundant = false;
  bool really_full_rank = false;
};

Classification classify(const IceQuiver& q);

bool is_acyclic(const IceQuiver& q);
bool is_abundant(const IceQuiver& q);
// Mutable part connected, n-1 edges, no multiple edges.
bool is_tree(const IceQuiver& q);
// Every mutable vertex is a sink or a source of the mutable part.
bool is_sink_source(const IceQuiver& q);
// Rows of the full extended matrix span Z^n.
bool is_really_full_rank(const IceQuiver& q);

bool is_mutable_sink(const IceQuiver& q, int v);
bool is_mutable_source(const IceQuiver& q, int v);

// Mutable neighbours of v (vertices u with b(u, v) != 0, u mutable).
std::vector<int> mutable_neighbors(const IceQuiver& q, int v);

// Reading of the third key condition.
//  strict:  b_{ki} > 0  <=>  b_{k'i} > 0
//  tolerant: strict, or b_{ki} > 0 <=> b_{ik'} > 0 for every i (the pair is
//            traversed by every other vertex as a path k -> i -> k' or back).
enum class KeyMode { Strict, TranspositionTolerant };

struct KeyPair {
  int k = 0;
  int k2 = 0;
  bool strict_sign_condition = true;  // false if only the tolerant reading holds
};

std::optional<KeyPair> is_key(const IceQuiver& q, KeyMode mode = KeyMode::Strict);

// Smallest point of return making q a fork, if any.
std::optional<int> is_fork(const IceQuiver& q);
// Every vertex that works as a point of return (empty if q is not a fork).
std::vector<int> fork_returns(const IceQuiver& q);

struct CanonicalForm {
  IceQuiver quiver;
  // relabeling[new_index] = old_index
  std::vector<int> relabeling;
};

// Canonical representative under relabelings that permute mutable vertices
// among themselves and frozen vertices among themselves.
CanonicalForm canonical_form(const IceQuiver& q);

// Relabels vertices: vertex `old` of q becomes perm[old] in the result. perm
// must map mutable to mutable and frozen to frozen.
IceQuiver relabel(const IceQuiver& q, const std::vector<int>& perm);

// Mutable part only.
IceQuiver mutable_part(const IceQuiver& q);

// Appends frozen rows (each of length n) below the existing ones.
IceQuiver add_frozen_rows(const IceQuiver& q, const std::vector<std::vector<std::int64_t>>& rows);

std::string to_string(const IceQuiver& q);

}  // namespace clusterdeep
