#pragma once

// Dense exact matrices and fraction-free elimination.

#include "tmeasure/real.hpp"

#include <cstddef>
#include <vector>

namespace tmeasure {

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  /// Copy with column `skip` removed.
  Matrix without_column(std::size_t skip) const {
    Matrix out(rows_, cols_ - 1);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0, oc = 0; c < cols_; ++c) {
        if (c == skip) continue;
        out(r, oc++) = (*this)(r, c);
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<BigRational>;

/// Determinant of a square integer matrix by Bareiss elimination.
BigInt bareiss_determinant(IntMatrix m);

/// Determinant of a square rational matrix: rows are cleared to integers,
/// then Bareiss is applied.
BigRational determinant(const RatMatrix& m);

/// Rank by fraction-free elimination.
std::size_t rank(IntMatrix m);

/// Basis of the right kernel {v : m v = 0} over Q (reduced row echelon form).
std::vector<std::vector<BigRational>> nullspace(RatMatrix m);

/// m * v
std::vector<BigRational> multiply(const IntMatrix& m, const std::vector<BigRational>& v);

}  // namespace tmeasure
