#pragma once

#include <cstdint>

#include "clusterdeep/quiver.hpp"

namespace clusterdeep {

// Named quivers used throughout the tests and the gallery. Vertex numbers in
// the comments are 1-based; frozen vertices come after the mutable ones.

// 1 -> 2.
IceQuiver a2_quiver();

// 2 -(b)-> 1 <-(a)- 3, no frozen vertices.
IceQuiver star_quiver(std::int64_t a, std::int64_t b);

// 1bar <- 1 -(a)-> 2 <- 2bar; frozen 3 = 1bar, 4 = 2bar.
IceQuiver rank2_quiver(std::int64_t a);

// Star with companion frozens: 3 -(a)-> 1 <-(b)- 2, 1bar -> 1, 3 -> 3bar,
// 2 -> 2bar; frozen 4 = 1bar, 5 = 2bar, 6 = 3bar.
IceQuiver star3_quiver(std::int64_t a, std::int64_t b);

// 2 -(a)-> 1, 2 -> 3, 1 -(b)-> 3.
IceQuiver key_triangle(std::int64_t a, std::int64_t b);

// 1 -(a)-> 2 -(b)-> 3, 4 -(c)-> 3, 1 -(d)-> 4, 1 -(e)-> 3.
IceQuiver key_square(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t e);

// 2 -(a)-> 1 -(b)-> 3, 2 -(c)-> 3.
IceQuiver abundant_triangle(std::int64_t a, std::int64_t b, std::int64_t c);

// 4 -(a)-> 1 -(b)-> 2 -(c)-> 3, 4 -(d)-> 2, 1 -(e)-> 3, 4 -(f)-> 3.
IceQuiver abundant_square(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t e,
                          std::int64_t f);

// Oriented triangle 2 -(p)-> 1 -(q)-> 3 -(r)-> 2.
IceQuiver cyclic_triangle(std::int64_t p, std::int64_t q, std::int64_t r);

// 2 -(a)-> 1 -(b)-> 3 -(c+ab)-> 2, 4 -(d)-> 2, 4 -(e)-> 1, 4 -(f)-> 3.
IceQuiver locally_acyclic_quiver(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t e,
                                 std::int64_t f);

}  // namespace clusterdeep
