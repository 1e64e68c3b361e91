#pragma once

#include <map>

#include "sltiles/tiling.hpp"
#include "sltiles/verify.hpp"

namespace sltiles {

// m-derived tiling: entry (i,j) is the adjacent m x m minor of t anchored at
// (i,j). m = 1 is the identity, m = 0 the all-ones tiling.
Tiling derived(const Tiling& t, std::size_t m);

// Dual: the (k-1)-derived tiling; stays a tame SLk-tiling when t is tame.
Tiling dual(const Tiling& t);

// Checks d_r(A*) = (r-1,r-1) . (d_s A) pointwise on the given window region
// of the source; requires r + s = k. With r = k-1, s = 1 this is the bidual
// identity.
VerifyReport check_derivation_identity(const Tiling& t, std::size_t r, std::size_t s,
                                       Point origin, std::size_t rows, std::size_t cols);

// Condensation identity on a (2k-1) x (2k-1) tame SLk window A (1-indexed in
// the classical statement): with B = A_11^(k), C = the (k-1)-derived array of
// A, D = C_22^(k), checks det D_11^(h) == det B_{h+1,h+1}^(k-h).
bool condense_check(const Window& a, int k, int h);

// Joint SL3/dual co-recursion: fills both arrays southeast of the seeds using
//   a_ij  * a_{i-1,j-1}  = a*_{i-1,j-1} + a_{i-1,j} a_{i,j-1}
//   a*_ij * a*_{i-1,j-1} = a_ij        + a*_{i-1,j} a*_{i,j-1}
// (the second is the bidual identity; a*_ij is the 2x2 minor of A at (i,j)).
// Seeds are explicit point maps; filling proceeds until the rectangle
// [0,rows) x [0,cols) is covered or no further site is computable.
struct CoRecursionResult {
  Window a;
  Window dual;
};
CoRecursionResult sl3_corecursion(const std::map<Point, Scalar>& seed_a,
                                  const std::map<Point, Scalar>& seed_dual, Point origin,
                                  std::size_t rows, std::size_t cols);

// Convenience: all-ones first row and column for both arrays.
CoRecursionResult sl3_corecursion_rect(std::size_t rows, std::size_t cols);

}  // namespace sltiles
