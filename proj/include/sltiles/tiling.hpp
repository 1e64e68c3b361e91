#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>

#include "sltiles/verify.hpp"
#include "sltiles/window.hpp"
#include "sltiles/word.hpp"

namespace sltiles {

// Domain descriptors for lazily evaluated tilings.
struct FullPlane {};
struct QuarterPlane {
  Point corner{0, 0};  // points with i >= corner.i and j >= corner.j
};
struct RectDomain {
  long i_lo, i_hi, j_lo, j_hi;  // inclusive bounds
};
struct BelowPath {
  std::shared_ptr<const PathGeometry> path;
  int max_distance = 0;  // 0 = everything below; > 0 restricts to that fringe
};

class Domain {
 public:
  Domain() : d_(FullPlane{}) {}
  Domain(FullPlane d) : d_(d) {}
  Domain(QuarterPlane d) : d_(d) {}
  Domain(RectDomain d) : d_(d) {}
  Domain(BelowPath d) : d_(std::move(d)) {}

  bool contains(Point p) const;
  Domain translated(long p, long q) const;
  Domain transposed() const;
  // Domain of pointwise m x m blocks: p is kept iff the whole block anchored
  // at p fits in the original domain.
  Domain shrunk_for_block(std::size_t m) const;
  std::string describe() const;

 private:
  std::variant<FullPlane, QuarterPlane, RectDomain, BelowPath> d_;
};

// A lazily evaluable bi-infinite (or partial) array of exact rationals.
// Evaluators are pure; results are memoized behind a mutex, so sharing a
// Tiling across threads behaves like a pure function.
class Tiling {
 public:
  using Evaluator = std::function<Scalar(Point)>;

  Tiling() = default;
  Tiling(int k, Domain domain, Evaluator eval, std::string provenance);

  int k() const { return k_; }
  const Domain& domain() const { return domain_; }
  const std::string& provenance() const { return provenance_; }

  Scalar at(Point p) const;  // throws std::domain_error outside the domain
  Scalar at(long i, long j) const { return at({i, j}); }

 private:
  int k_ = 0;
  Domain domain_;
  Evaluator eval_;
  std::string provenance_;
  struct Cache {
    std::mutex mu;
    std::map<std::pair<long, long>, Scalar> values;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Materializes a window; every requested point must be in the domain
// (domain error naming the first offending point otherwise).
Window window_of(const Tiling& t, Point origin, std::size_t rows, std::size_t cols);

// (p,q)-translate: entry(i,j) of the result is entry(i+p, j+q) of t.
Tiling translate(const Tiling& t, long p, long q);

// entry(i,j) of the result is entry(j,i) of t.
Tiling transpose(const Tiling& t);

// The rank-flexible SL2 family: a checkerboard of +-1 blocks and free values,
// SL2 for any assignment of the free slots. `assigned` overrides the default
// values (row-major 1..25 on block indices (1..5)x(1..5), 0 elsewhere).
Tiling wild_sl2(const std::map<std::pair<long, long>, Scalar>& assigned);

}  // namespace sltiles
