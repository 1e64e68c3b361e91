#include "sltiles/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace sltiles {

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<long>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  e_.reserve(rows_ * cols_);
  for (const auto& row : init) {
    if (row.size() != cols_) throw std::invalid_argument("ragged initializer");
    for (long v : row) e_.emplace_back(v);
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
  ExactMatrix p(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) p.at(i, j) += a * rhs.at(k, j);
    }
  return p;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix m = *this;
  for (auto& v : m.e_) v = -v;
  return m;
}

bool ExactMatrix::is_identity() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != Scalar(i == j ? 1 : 0)) return false;
  return true;
}

bool ExactMatrix::is_minus_identity() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != Scalar(i == j ? -1 : 0)) return false;
  return true;
}

namespace {

// Bareiss elimination on a working copy. Runs until column `limit`; returns
// the number of pivots found and, through `determinant`, the exact det when
// the matrix is square (sign tracked across row swaps).
std::size_t bareiss(std::vector<Scalar>& m, std::size_t rows, std::size_t cols, Scalar* determinant) {
  auto at = [&](std::size_t i, std::size_t j) -> Scalar& { return m[i * cols + j]; };
  Scalar prev_pivot(1);
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && at(p, c) == 0) ++p;
    if (p == rows) {
      if (determinant) {
        *determinant = 0;
        return r;
      }
      continue;  // rank-only mode: move to next column
    }
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
      sign = -sign;
    }
    const Scalar pivot = at(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        at(i, j) = (at(i, j) * pivot - at(i, c) * at(r, j)) / prev_pivot;
      at(i, c) = 0;
    }
    prev_pivot = pivot;
    ++r;
  }
  if (determinant) {
    // After full elimination of a square matrix the last pivot is det/sign.
    *determinant = (r == rows) ? Scalar(sign) * prev_pivot : Scalar(0);
  }
  return r;
}

}  // namespace

Scalar ExactMatrix::det() const {
  if (!square()) throw std::invalid_argument("determinant of a non-square matrix");
  if (rows_ == 0) return 1;
  std::vector<Scalar> work = e_;
  Scalar d;
  bareiss(work, rows_, cols_, &d);
  return d;
}

std::size_t ExactMatrix::rank() const {
  std::vector<Scalar> work = e_;
  return bareiss(work, rows_, cols_, nullptr);
}

ExactMatrix ExactMatrix::inverse() const {
  if (!square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = rows_;
  ExactMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && aug.at(p, c) == 0) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug.at(p, j), aug.at(c, j));
    const Scalar pivot = aug.at(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) aug.at(c, j) /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug.at(i, c) == 0) continue;
      const Scalar f = aug.at(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) aug.at(i, j) -= f * aug.at(c, j);
    }
  }
  ExactMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

}  // namespace sltiles
