#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "sltiles/scalar.hpp"

namespace sltiles {

// Dense row-major matrix of exact rationals. Determinant and rank use
// fraction-free Bareiss elimination so intermediate values stay small even
// on integer input.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, Scalar(0)) {}
  ExactMatrix(std::initializer_list<std::initializer_list<long>> init);

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  ExactMatrix transposed() const;
  ExactMatrix operator*(const ExactMatrix& rhs) const;
  ExactMatrix operator-() const;
  bool operator==(const ExactMatrix& rhs) const = default;

  bool is_identity() const;
  bool is_minus_identity() const;

  // Exact determinant by Bareiss with row pivoting. Throws std::invalid_argument
  // if not square. det of the 0x0 matrix is 1.
  Scalar det() const;

  std::size_t rank() const;

  // Exact inverse (Gauss-Jordan); throws std::domain_error on singular input.
  ExactMatrix inverse() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> e_;
};

}  // namespace sltiles
