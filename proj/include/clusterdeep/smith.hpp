#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace clusterdeep {

// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static IntMatrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  mpz_class& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const mpz_class& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  void append_row(const std::vector<mpz_class>& row);
  void append_row(const std::vector<long>& row);
  std::vector<mpz_class> row(int i) const;

  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpz_class> a_;
};

// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... and
// d_i >= 0. `rank` is the number of nonzero diagonal entries.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  int rank = 0;

  std::vector<mpz_class> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& M);

// Nonzero diagonal entries of the Smith form, in order.
std::vector<mpz_class> invariant_factors(const IntMatrix& M);

mpz_class determinant(const IntMatrix& M);

// Inverse of a unimodular matrix (throws InputError if det != +-1).
IntMatrix unimodular_inverse(const IntMatrix& M);

}  // namespace clusterdeep
