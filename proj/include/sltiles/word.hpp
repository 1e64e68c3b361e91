#pragma once

#include <string>
#include <vector>

#include "sltiles/window.hpp"

namespace sltiles {

enum class Letter : unsigned char { X, Y };

inline Letter swapped(Letter l) { return l == Letter::X ? Letter::Y : Letter::X; }

// Bi-infinite word over {x,y} with periodic tails: letters of `core` occupy
// indices 0..|core|-1, `right` repeats from |core| on, `left` repeats to the
// left of 0. The path starts its core at `anchor`.
//
// Path convention (matrix coordinates, first axis downward): reading the word
// left to right, an x-letter steps by (-1,0) (up) and a y-letter by (0,+1)
// (right). Every step moves to the next diagonal j-i+1, so the path crosses
// each diagonal exactly once.
class Word {
 public:
  Word(std::vector<Letter> left, std::vector<Letter> core, std::vector<Letter> right,
       Point anchor = {0, 0});

  // Parses "(xy)* | xxy | (xxyy)*": leftPeriod | core | rightPeriod.
  // The periodic fields require the (...)* form; core may be empty.
  static Word parse(const std::string& text);
  std::string str() const;

  // At least one x and one y in each periodic tail.
  bool admissible() const;

  Letter letter(long n) const;
  Point anchor() const { return anchor_; }
  const std::vector<Letter>& left() const { return left_; }
  const std::vector<Letter>& core() const { return core_; }
  const std::vector<Letter>& right() const { return right_; }

  // Point reached after the first n letters (negative n walks backwards).
  Point point_at(long n) const;

  // The word whose path is the reflection {(j,i)} of this word's path.
  Word transposed() const;

 private:
  std::vector<Letter> left_, core_, right_;
  Point anchor_;
  Point core_disp_, left_disp_, right_disp_;  // displacement over core / one period
};

struct FreeLetter {
  Letter letter;
  bool barred = false;
  bool operator==(const FreeLetter&) const = default;
};

// Word in the free group on {x, y}; reduce() cancels adjacent inverse pairs.
using FreeGroupWord = std::vector<FreeLetter>;

FreeGroupWord reduce(FreeGroupWord w);
FreeGroupWord bar_reverse(const FreeGroupWord& w);  // reverse order, bar each letter
std::string free_word_str(const FreeGroupWord& w);  // x, y, X (= x bar), Y

// Geometry of the staircase path of an admissible word: projections,
// below/above classification, fringe membership and projection words.
class PathGeometry {
 public:
  explicit PathGeometry(Word w);

  const Word& word() const { return w_; }

  Point point_at(long n) const { return w_.point_at(n); }
  // The unique path point on diagonal h = j - i.
  Point point_on_diagonal(long h) const { return point_at(h - h0_); }

  // Path-visit index ranges: rows are visited on a contiguous, descending
  // index interval; columns likewise.
  long first_index_in_row(long i) const;
  long last_index_in_row(long i) const;
  long first_index_in_col(long j) const;
  long last_index_in_col(long j) const;

  bool below(Point p) const;  // points on the path count as below
  bool on_path(Point p) const;
  // Distance of a below-path point (on-path points are at distance 1).
  long distance_below(Point p) const;
  bool in_fringe(Point p, int k) const { return below(p) && distance_below(p) <= k; }

  // Horizontal projection: the leftmost path point in p's row (so that
  // below(p) iff its column is <= p.j). Vertical projection: the topmost
  // path point in p's column. These are the endpoints used by the
  // non-crossing path enumeration.
  Point horizontal_projection(Point p) const;
  Point vertical_projection(Point p) const;

  // Projection word w_p: the path segment between the latest visit of p's
  // row and the latest visit of p's column, read forward for below-path
  // points and bar-reversed for above-path points. It differs from the
  // leftmost-projection segment by the row run's y-prefix, which matters:
  // only this form satisfies T(p) = corner of mu(w_p).
  FreeGroupWord projection_word(Point p) const;
  // u_p: w_p with the maximal x-prefix and y-suffix stripped (below only).
  FreeGroupWord short_projection_word(Point p) const;

  std::vector<Point> path_points(long n_lo, long n_hi) const;  // inclusive range
  std::vector<Letter> letters(long n_lo, long n_hi) const;     // [n_lo, n_hi)

 private:
  Word w_;
  long h0_;  // diagonal of the anchor
};

}  // namespace sltiles
