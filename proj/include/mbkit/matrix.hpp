#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mbkit/errors.hpp"
#include "mbkit/intpoly.hpp"

namespace mbkit {

// Dense integer matrix, row-major. Sized at construction; all entries start
// at zero. Desk-scale only: the homology computations in this library run on
// complexes with tens of cells, so no sparsity or pivoting heuristics beyond
// what correctness needs.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;

  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntegerMatrix from_rows(std::vector<std::vector<Int>> rows) {
    IntegerMatrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows.front().size();
    m.data_.reserve(m.rows_ * m.cols_);
    for (auto& r : rows) {
      if (r.size() != m.cols_)
        throw input_error("matrix rows have inconsistent lengths");
      for (auto& x : r) m.data_.push_back(std::move(x));
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend IntegerMatrix operator*(const IntegerMatrix& a,
                                 const IntegerMatrix& b) {
    if (a.cols_ != b.rows_)
      throw input_error("matrix product dimension mismatch");
    IntegerMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  bool is_zero() const {
    for (const Int& x : data_)
      if (x != 0) return false;
    return true;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i)
      std::swap((*this)(i, a), (*this)(i, b));
  }

  // row a -= q * row b
  void row_axpy(std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) -= q * (*this)(b, j);
  }

  // col a -= q * col b
  void col_axpy(std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) -= q * (*this)(i, b);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

// Invariant-factor data of an integer matrix: elementary_divisors holds the
// positive diagonal d_1 | d_2 | ... | d_r of the Smith normal form and rank
// is r. Unimodular transforms are not tracked; homology only needs the
// divisor chain.
struct SmithNormalForm {
  std::size_t rank = 0;
  std::vector<Int> elementary_divisors;
};

namespace detail {

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Locate the entry of smallest nonzero magnitude in the trailing block
// starting at (t, t). Returns false if the block is zero.
inline bool find_pivot(const IntegerMatrix& m, std::size_t t, std::size_t& pi,
                       std::size_t& pj) {
  bool found = false;
  Int best = 0;
  for (std::size_t i = t; i < m.rows(); ++i)
    for (std::size_t j = t; j < m.cols(); ++j) {
      const Int& x = m(i, j);
      if (x == 0) continue;
      Int a = abs_int(x);
      if (!found || a < best) {
        found = true;
        best = std::move(a);
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace detail

// Smith normal form by the classical smallest-pivot reduction. Each pass
// moves the entry of least magnitude to the corner, clears its row and
// column with exact integer quotients (restarting whenever a remainder
// strictly smaller than the pivot appears, which guarantees termination) and
// then repairs divisibility by folding in any row containing an entry the
// pivot does not divide.
inline SmithNormalForm smith_normal_form(IntegerMatrix m) {
  SmithNormalForm result;
  const std::size_t bound = m.rows() < m.cols() ? m.rows() : m.cols();
  std::size_t t = 0;
  while (t < bound) {
    std::size_t pi = 0, pj = 0;
    if (!detail::find_pivot(m, t, pi, pj)) break;
    m.swap_rows(t, pi);
    m.swap_cols(t, pj);

    bool clean = true;
    for (std::size_t i = t + 1; i < m.rows(); ++i) {
      if (m(i, t) == 0) continue;
      m.row_axpy(i, t, m(i, t) / m(t, t));
      if (m(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < m.cols(); ++j) {
      if (m(t, j) == 0) continue;
      m.col_axpy(j, t, m(t, j) / m(t, t));
      if (m(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // a smaller nonzero entry exists, re-pivot

    bool divisible = true;
    for (std::size_t i = t + 1; i < m.rows() && divisible; ++i)
      for (std::size_t j = t + 1; j < m.cols() && divisible; ++j)
        if (m(i, j) % m(t, t) != 0) {
          m.row_axpy(t, i, Int(-1));  // add row i into row t, then redo
          divisible = false;
        }
    if (!divisible) continue;

    result.elementary_divisors.push_back(detail::abs_int(m(t, t)));
    ++t;
  }
  result.rank = result.elementary_divisors.size();
  return result;
}

inline std::size_t matrix_rank(const IntegerMatrix& m) {
  return smith_normal_form(m).rank;
}

// Rank of the integer kernel: cols - rank.
inline std::size_t kernel_rank(const IntegerMatrix& m) {
  return m.cols() - matrix_rank(m);
}

}  // namespace mbkit
