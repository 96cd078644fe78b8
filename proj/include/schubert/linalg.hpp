#pragma once

// Small dense exact linear algebra.

#include <cstddef>
#include <vector>

#include "schubert/arith.hpp"

namespace schubert {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0)) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Fraction-free Bareiss elimination; every intermediate stays integral.
Integer bareiss_determinant(Matrix<Integer> m);

/// Rank over Q.
std::size_t rank(Matrix<Rational> m);

/// Basis of the right null space {x : m x = 0} over Q.
std::vector<std::vector<Rational>> nullspace(Matrix<Rational> m);

}  // namespace schubert
