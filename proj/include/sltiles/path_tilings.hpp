#pragma once

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "sltiles/laurent.hpp"
#include "sltiles/matrix.hpp"
#include "sltiles/tiling.hpp"
#include "sltiles/word.hpp"

namespace sltiles {

// Group morphism into SLk: x -> Id + N, y -> Id + N^tr with N the upper shift.
// Barred letters map to the exact integer inverses (finite Neumann series,
// Id + N is unipotent so no rationals appear).
ExactMatrix mu(const FreeGroupWord& w, int k);

// Variant used for above-path points: x -> (Id - N)^{-1}, y -> its transpose.
ExactMatrix mu_prime(const FreeGroupWord& w, int k);

// corner(M) = e_k M e_k^tr, the bottom-right entry.
Scalar mu_corner(const ExactMatrix& m);

// The full-plane tame SLk-tiling T_w(p) = e_k mu(w_p) e_k^tr of an admissible
// word. All entries are positive; principal minors of order < k equal 1.
Tiling path_tiling(const Word& w, int k);

// Brute-force oracle: counts non-crossing families of lattice paths inside
// the k-fringe, joining the horizontal projections of the rows I to the
// vertical projections of the columns J (sorted index pairing). This is the
// independent check for minors of path tilings, not the fast evaluation path.
// `budget` caps the number of enumeration steps; exceeding it is an error.
Int count_noncrossing(const Word& w, int k, const std::vector<long>& I,
                      const std::vector<long>& J, long long budget = 50'000'000);

// Laurent-weighted analogue of a path tiling, defined below the path only.
class WeightedTiling {
 public:
  WeightedTiling(Word w, int k);

  int k() const { return k_; }
  const PathGeometry& path() const { return *path_; }

  // Sum of path weights for a below-path point; throws std::domain_error
  // above the path.
  LaurentPoly at(Point p) const;

  // Principal r x r minor whose upper-left corner is the path point on
  // diagonal h (cofactor expansion over Laurent polynomials).
  LaurentPoly principal_minor(long h, int r) const;

  // Minor on arbitrary below-path rows I and columns J.
  LaurentPoly minor(const std::vector<long>& I, const std::vector<long>& J) const;

  // Entries specialize to the counting tiling at t(h,r) := 1.
  Scalar at_all_ones(Point p) const;

 private:
  int k_;
  std::shared_ptr<const PathGeometry> path_;
  mutable std::map<std::pair<long, long>, LaurentPoly> memo_;
};

}  // namespace sltiles
