#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sltiles/matrix.hpp"
#include "sltiles/tiling.hpp"
#include "sltiles/window.hpp"
#include "sltiles/word.hpp"

namespace sltiles {

// Family of coefficient vectors indexed by an integer (absolute row or column
// index), on [lo, hi], optionally extended two-sided periodically.
struct IndexedFamily {
  long lo = 0;
  long hi = -1;  // empty when hi < lo
  bool periodic = false;
  std::vector<std::vector<Scalar>> vectors;

  bool empty() const { return hi < lo; }
  bool defined_at(long idx) const { return periodic ? !empty() : (idx >= lo && idx <= hi); }
  const std::vector<Scalar>& at(long idx) const;
};

// The triple (S, lambda, gamma) characterizing a tame SLk-tiling, anchored at
// the seed block's top-left corner. lambda_j carries the coefficients of the
// column relation whose last column is j:
//   (-1)^k C_{j-k} + sum_m (-1)^{k+m} (lambda_j)_m C_{j-k+m} + C_j = 0,
// and gamma_i the analogous row relation ending at row i.
struct LinearizationData {
  int k = 2;
  ExactMatrix S;
  Point anchor{0, 0};
  IndexedFamily lambda;
  IndexedFamily gamma;
};

// Signs (-1)^{k+m+1} multiplying C_{j-k+m} when the relation is solved for
// C_j; m = 0 gives the fixed leading sign (coefficient 1 there).
std::vector<int> relation_solve_signs(int k);

// Thrown when a window fails the rank-k / SLk consistency required by the
// linearization bijection.
struct not_tame_error : std::domain_error {
  using std::domain_error::domain_error;
};

LinearizationData extract_linearization(const Window& w, int k);

Tiling build_from_linearization(const LinearizationData& d);

// Data of the (1,0)-translate: S_x = companion(gamma at anchor row + k) * S,
// gamma shifts by one, lambda is unchanged.
LinearizationData translate_data(const LinearizationData& d);

std::string linearization_to_json(const LinearizationData& d);
LinearizationData linearization_from_json(const std::string& text);

LinearizationData random_linearization_data(int k, long lo, long hi, bool periodic,
                                            std::uint64_t seed);

// Partial tiling on an explicit set of points, with the staircase word that
// bounds its shape from above.
struct PartialTiling {
  Word word;
  std::map<Point, Scalar> assigned;
};

// Completes a below-path partial SLk-tiling to the tame tiling it determines
// (on the rectangle reachable from the extracted data). Preconditions: every
// fully assigned adjacent k x k minor is 1 and every fully assigned
// (k+1) x (k+1) minor vanishes; violations are reported with their anchor.
Tiling extend_below_path(const PartialTiling& p, int k);

// Values on the (k-1)-fringe keyed by (diagonal h, distance r), r = 1..k-1,
// for h in a contiguous range.
using FringeValues = std::map<std::pair<long, int>, Scalar>;

// Unique tame extension of a (k-1)-fringe assignment; requires all principal
// minors of orders 1..k-1 in range to be nonzero (singular-fringe error names
// the diagonal and order otherwise).
Tiling extend_from_fringe(const Word& w, const FringeValues& values, int k);

enum class LineKind { Row, Column };

// Removes row/column `index` from a tame SL2-tiling, after checking
// C_{index} = C_{index-1} + C_{index+1} on a verification window spanning
// `check_lo..check_hi` in the transverse direction.
Tiling suppress_line(const Tiling& t, LineKind which, long index, long check_lo, long check_hi);

}  // namespace sltiles
