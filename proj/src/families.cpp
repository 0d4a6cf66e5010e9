#include "clusterdeep/families.hpp"

namespace clusterdeep {

namespace {

using A = IceQuiver::Arrow;

// 1-based arrows for readability.
IceQuiver build(int n, int m, std::vector<A> arrows) {
  for (auto& a : arrows) {
    --a.from;
    --a.to;
  }
  return IceQuiver::from_arrows(n, m, arrows);
}

}  // namespace

IceQuiver a2_quiver() { return build(2, 0, {{1, 2, 1}}); }

IceQuiver star_quiver(std::int64_t a, std::int64_t b) { return build(3, 0, {{2, 1, b}, {3, 1, a}}); }

IceQuiver rank2_quiver(std::int64_t a) { return build(2, 2, {{1, 2, a}, {1, 3, 1}, {4, 2, 1}}); }

IceQuiver star3_quiver(std::int64_t a, std::int64_t b) {
  return build(3, 3, {{3, 1, a}, {2, 1, b}, {4, 1, 1}, {3, 6, 1}, {2, 5, 1}});
}

IceQuiver key_triangle(std::int64_t a, std::int64_t b) { return build(3, 0, {{2, 1, a}, {2, 3, 1}, {1, 3, b}}); }

IceQuiver key_square(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t e) {
  return build(4, 0, {{1, 2, a}, {2, 3, b}, {4, 3, c}, {1, 4, d}, {1, 3, e}});
}

IceQuiver abundant_triangle(std::int64_t a, std::int64_t b, std::int64_t c) {
  return build(3, 0, {{2, 1, a}, {1, 3, b}, {2, 3, c}});
}

IceQuiver abundant_square(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t e,
                          std::int64_t f) {
  return build(4, 0, {{4, 1, a}, {1, 2, b}, {2, 3, c}, {4, 2, d}, {1, 3, e}, {4, 3, f}});
}

IceQuiver cyclic_triangle(std::int64_t p, std::int64_t q, std::int64_t r) {
  return build(3, 0, {{2, 1, p}, {1, 3, q}, {3, 2, r}});
}

IceQuiver locally_acyclic_quiver(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t e,
                                 std::int64_t f) {
  return build(4, 0, {{2, 1, a}, {1, 3, b}, {3, 2, c + a * b}, {4, 2, d}, {4, 1, e}, {4, 3, f}});
}

}  // namespace clusterdeep
