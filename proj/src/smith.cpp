#include "clusterdeep/smith.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "clusterdeep/errors.hpp"

namespace clusterdeep {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void IntMatrix::append_row(const std::vector<mpz_class>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(row.size());
  if (static_cast<int>(row.size()) != cols_) throw InputError("row length mismatch");
  a_.insert(a_.end(), row.begin(), row.end());
  ++rows_;
}

void IntMatrix::append_row(const std::vector<long>& row) {
  std::vector<mpz_class> r(row.begin(), row.end());
  append_row(r);
}

std::vector<mpz_class> IntMatrix::row(int i) const {
  return {a_.begin() + static_cast<std::ptrdiff_t>(i) * cols_,
          a_.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols_};
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw InputError("matrix shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const mpz_class& x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
    }
  return r;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
  }
  os << "]";
  return os.str();
}

std::vector<mpz_class> SmithForm::diagonal() const {
  std::vector<mpz_class> d;
  for (int i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[dst] += f * row[src]
void add_row(IntMatrix& m, int dst, int src, const mpz_class& f) {
  for (int j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}

void add_col(IntMatrix& m, int dst, int src, const mpz_class& f) {
  for (int i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

void negate_row(IntMatrix& m, int r) {
  for (int j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& M) {
  const int r = M.rows(), c = M.cols();
  SmithForm s{IntMatrix::identity(r), M, IntMatrix::identity(c), 0};
  IntMatrix& D = s.D;
  int t = 0;
  for (; t < std::min(r, c); ++t) {
    // pivot: smallest nonzero absolute value in the remaining block
    int pi = -1, pj = -1;
    for (int i = t; i < r; ++i)
      for (int j = t; j < c; ++j)
        if (D(i, j) != 0 && (pi < 0 || abs(D(i, j)) < abs(D(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    swap_rows(D, t, pi);
    swap_rows(s.U, t, pi);
    swap_cols(D, t, pj);
    swap_cols(s.V, t, pj);
    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < r; ++i) {
        if (D(i, t) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        add_row(D, i, t, -q);
        add_row(s.U, i, t, -q);
        if (D(i, t) != 0) {
          swap_rows(D, t, i);
          swap_rows(s.U, t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < c; ++j) {
        if (D(t, j) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        add_col(D, j, t, -q);
        add_col(s.V, j, t, -q);
        if (D(t, j) != 0) {
          swap_cols(D, t, j);
          swap_cols(s.V, t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility: the pivot must divide every remaining entry
      int bad_i = -1;
      for (int i = t + 1; i < r && bad_i < 0; ++i)
        for (int j = t + 1; j < c; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad_i = i;
            break;
          }
      if (bad_i < 0) break;
      add_row(D, t, bad_i, 1);
      add_row(s.U, t, bad_i, 1);
    }
    if (D(t, t) < 0) {
      negate_row(D, t);
      negate_row(s.U, t);
    }
  }
  s.rank = t;
  return s;
}

std::vector<mpz_class> invariant_factors(const IntMatrix& M) {
  SmithForm s = smith_normal_form(M);
  std::vector<mpz_class> f;
  for (int i = 0; i < s.rank; ++i) f.push_back(s.D(i, i));
  return f;
}

mpz_class determinant(const IntMatrix& M) {
  if (M.rows() != M.cols()) throw InputError("determinant of a non-square matrix");
  const int n = M.rows();
  // fraction-free Bareiss elimination
  IntMatrix a = M;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      int p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(a, k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        mpz_class v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * (n ? a(n - 1, n - 1) : mpz_class(1));
}

IntMatrix unimodular_inverse(const IntMatrix& M) {
  const int n = M.rows();
  if (n != M.cols()) throw InputError("inverse of a non-square matrix");
  SmithForm s = smith_normal_form(M);
  for (int i = 0; i < n; ++i)
    if (s.D(i, i) != 1) throw InputError("matrix is not unimodular");
  // U M V = I  =>  M^{-1} = V U
  return s.V * s.U;
}

}  // namespace clusterdeep
