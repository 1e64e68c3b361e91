#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sltiles/matrix.hpp"
#include "sltiles/scalar.hpp"

namespace sltiles {

struct Point {
  long i = 0;
  long j = 0;
  auto operator<=>(const Point&) const = default;
};

// A materialized rectangular block of a tiling. Coordinates follow the matrix
// convention used throughout: the first coordinate grows downward, the second
// to the right. entry(i, j) uses absolute plane coordinates, offset by origin.
class Window {
 public:
  Window() = default;
  Window(Point origin, std::size_t rows, std::size_t cols);

  Point origin() const { return origin_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::optional<int> k() const { return k_; }
  void set_k(int k) { k_ = k; }

  bool contains(Point p) const {
    return p.i >= origin_.i && p.i < origin_.i + static_cast<long>(rows_) && p.j >= origin_.j &&
           p.j < origin_.j + static_cast<long>(cols_);
  }

  Scalar& entry(long i, long j);
  const Scalar& entry(long i, long j) const;  // throws std::out_of_range

  Window transposed() const;
  Window translated(long p, long q) const;  // shifts the origin by (-p,-q): entry(i,j) -> entry(i+p,j+q)

  // Submatrix on absolute row set I and column set J (|I| = |J| not required here).
  ExactMatrix submatrix(const std::vector<long>& I, const std::vector<long>& J) const;

  bool operator==(const Window&) const = default;

 private:
  Point origin_;
  std::size_t rows_ = 0, cols_ = 0;
  std::optional<int> k_;
  std::vector<Scalar> e_;
};

// det of the submatrix selected by I and J; the empty minor is 1.
// Throws std::invalid_argument when |I| != |J|, std::out_of_range when an
// index leaves the window.
Scalar minor_of(const Window& w, const std::vector<long>& I, const std::vector<long>& J);

// Adjacent m x m minor anchored at (i, j).
Scalar adjacent_minor(const Window& w, long i, long j, std::size_t m);

// Dodgson condensation identity at anchor (i, j) for order r:
//   M^(r+1)_{i,j} * M^(r-1)_{i+1,j+1} == M^(r)_{i,j} M^(r)_{i+1,j+1} - M^(r)_{i,j+1} M^(r)_{i+1,j}
// Requires the (r+1)x(r+1) block at (i,j) to fit.
bool dodgson_check(const Window& w, long i, long j, std::size_t r);

std::size_t rank_of(const Window& w);

// Row (or column) reversal; preserves the SLk property only when k = 0,1 mod 4,
// hence the declared-order guard.
Window reflect_rows(const Window& w, int k);
Window reflect_cols(const Window& w, int k);

}  // namespace sltiles
