#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "uchain/local_scalar.hpp"
#include "uchain/polynomial.hpp"

namespace uchain {

/// Dense row-major matrix over a commutative ring of characteristic 2.
/// Entry (r, c) is the coefficient of basis element r in the image of basis element c.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(Polynomial::one());
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  const T& operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
  }

  Matrix& operator+=(const Matrix& other) {
    assert(rows_ == other.rows_ && cols_ == other.cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) {
      if (!other.data_[i].is_zero()) data_[i] += other.data_[i];
    }
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }

  /// Product skipping zero entries; the complexes handled here are sparse.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix out(a.rows_, b.cols_);
    std::vector<std::vector<std::size_t>> b_row_support(b.rows_);
    for (std::size_t k = 0; k < b.rows_; ++k) {
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) b_row_support[k].push_back(j);
      }
    }
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j : b_row_support[k]) out(i, j) += x * b(k, j);
      }
    }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using PolyMatrix = Matrix<Polynomial>;
using LocalMatrix = Matrix<LocalScalar>;

inline LocalMatrix to_local(const PolyMatrix& m) {
  LocalMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = LocalScalar(m(r, c));
  }
  return out;
}

}  // namespace uchain
