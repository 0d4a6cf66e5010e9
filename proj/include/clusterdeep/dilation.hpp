#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "clusterdeep/point.hpp"
#include "clusterdeep/quiver.hpp"
#include "clusterdeep/smith.hpp"

namespace clusterdeep {

// (C*)^torus_rank x prod mu_{d_i}.
struct GroupStructure {
  int torus_rank = 0;
  std::vector<mpz_class> torsion;  // invariant factors >= 2

  bool trivial() const { return torus_rank == 0 && torsion.empty(); }
  friend bool operator==(const GroupStructure&, const GroupStructure&) = default;
  std::string to_string() const;
};

// Exponent vector c of a monomial equation prod t_i^{c_i} = 1.
using CharacterConstraint = std::vector<std::int64_t>;

struct DilationGroup {
  GroupStructure group;
  std::vector<CharacterConstraint> equations;  // one per mutable vertex
};

// The subgroup of (C*)^N cut out by the constraints, i.e. Hom(Z^N / L, C*)
// for the lattice L they span.
GroupStructure group_of(const std::vector<CharacterConstraint>& constraints, int N);

DilationGroup dilation_group(const IceQuiver& q);

// chi with t(x'_k) = t^chi x'_k: [b_{.k}]_+ - e_k.
CharacterConstraint xprime_character(const IceQuiver& q, int k);

// Dilation equations plus e_i for every nonzero coordinate and the x'_k
// character for every nonzero p'_k. Throws InvalidPoint on a shape mismatch.
std::vector<CharacterConstraint> stabilizer_constraints(const IceQuiver& q, const ModelPoint& pt);

GroupStructure stabilizer(const IceQuiver& q, const ModelPoint& pt);

// Column k removed, row k moved to the end of the frozen block.
IceQuiver freeze_vertex(const IceQuiver& q, int k);

// New index of every old vertex after freeze_vertex(q, k).
std::vector<int> freeze_relabeling(const IceQuiver& q, int k);

// "t2^3 t3^2 = 1"; both sides shown when both are nonempty.
std::string render_constraint(const CharacterConstraint& c, const std::vector<std::string>& names = {});

// Default names: "1".."n" for mutable, "n+1".. for frozen.
std::vector<std::string> default_vertex_names(int N);

// An element of a subgroup of (C*)^N, described exactly.
//   OneParameter: t_i = s^{e_i} for any s in C* (a subtorus).
//   Torsion:      t_i = zeta^{e_i}, zeta a primitive order-th root of unity.
struct StabilizerElement {
  enum class Kind { OneParameter, Torsion };
  Kind kind = Kind::Torsion;
  mpz_class order = 0;  // torsion only
  std::vector<mpz_class> exponents;

  // Order of the element itself (0 for a one-parameter subgroup).
  mpz_class element_order() const;
  bool nontrivial() const;
  std::string to_string(const std::vector<std::string>& names = {}) const;
};

// True if the element (every element, for OneParameter) satisfies every
// constraint.
bool satisfies(const StabilizerElement& e, const std::vector<CharacterConstraint>& constraints);

// Generators from the Smith form: one torsion element per invariant factor
// >= 2 and one subtorus direction per free rank.
std::vector<StabilizerElement> group_generators(const std::vector<CharacterConstraint>& constraints, int N);

IntMatrix constraint_matrix(const std::vector<CharacterConstraint>& constraints, int N);

}  // namespace clusterdeep
