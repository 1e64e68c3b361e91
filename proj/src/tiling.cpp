#include "sltiles/tiling.hpp"

#include <sstream>
#include <stdexcept>

namespace sltiles {

bool Domain::contains(Point p) const {
  return std::visit(
      [&](const auto& d) -> bool {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, FullPlane>) {
          return true;
        } else if constexpr (std::is_same_v<T, QuarterPlane>) {
          return p.i >= d.corner.i && p.j >= d.corner.j;
        } else if constexpr (std::is_same_v<T, RectDomain>) {
          return p.i >= d.i_lo && p.i <= d.i_hi && p.j >= d.j_lo && p.j <= d.j_hi;
        } else {
          if (!d.path->below(p)) return false;
          return d.max_distance == 0 || d.path->distance_below(p) <= d.max_distance;
        }
      },
      d_);
}

Domain Domain::translated(long p, long q) const {
  return std::visit(
      [&](const auto& d) -> Domain {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, FullPlane>) {
          return Domain(d);
        } else if constexpr (std::is_same_v<T, QuarterPlane>) {
          return Domain(QuarterPlane{{d.corner.i - p, d.corner.j - q}});
        } else if constexpr (std::is_same_v<T, RectDomain>) {
          return Domain(RectDomain{d.i_lo - p, d.i_hi - p, d.j_lo - q, d.j_hi - q});
        } else {
          const Word& w = d.path->word();
          Word moved(w.left(), w.core(), w.right(),
                     Point{w.anchor().i - p, w.anchor().j - q});
          return Domain(BelowPath{std::make_shared<PathGeometry>(moved), d.max_distance});
        }
      },
      d_);
}

Domain Domain::transposed() const {
  return std::visit(
      [&](const auto& d) -> Domain {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, FullPlane>) {
          return Domain(d);
        } else if constexpr (std::is_same_v<T, QuarterPlane>) {
          return Domain(QuarterPlane{{d.corner.j, d.corner.i}});
        } else if constexpr (std::is_same_v<T, RectDomain>) {
          return Domain(RectDomain{d.j_lo, d.j_hi, d.i_lo, d.i_hi});
        } else {
          return Domain(BelowPath{
              std::make_shared<PathGeometry>(d.path->word().transposed()), d.max_distance});
        }
      },
      d_);
}

Domain Domain::shrunk_for_block(std::size_t m) const {
  long s = static_cast<long>(m) - 1;
  return std::visit(
      [&](const auto& d) -> Domain {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, FullPlane>) {
          return Domain(d);
        } else if constexpr (std::is_same_v<T, QuarterPlane>) {
          return Domain(d);  // blocks grow toward +infinity, nothing to trim
        } else if constexpr (std::is_same_v<T, RectDomain>) {
          return Domain(RectDomain{d.i_lo, d.i_hi - s, d.j_lo, d.j_hi - s});
        } else {
          // A block at p stays below the path iff its top-right corner does,
          // i.e. iff (p.i, p.j + s) is below: shift the path left by s.
          const Word& w = d.path->word();
          Word moved(w.left(), w.core(), w.right(),
                     Point{w.anchor().i, w.anchor().j - s});
          int depth = d.max_distance == 0 ? 0 : d.max_distance - static_cast<int>(s);
          return Domain(BelowPath{std::make_shared<PathGeometry>(moved), depth});
        }
      },
      d_);
}

std::string Domain::describe() const {
  return std::visit(
      [&](const auto& d) -> std::string {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, FullPlane>) {
          return "full-plane";
        } else if constexpr (std::is_same_v<T, QuarterPlane>) {
          std::ostringstream s;
          s << "quarter-plane at (" << d.corner.i << "," << d.corner.j << ")";
          return s.str();
        } else if constexpr (std::is_same_v<T, RectDomain>) {
          std::ostringstream s;
          s << "rect rows [" << d.i_lo << "," << d.i_hi << "] cols [" << d.j_lo << "," << d.j_hi
            << "]";
          return s.str();
        } else {
          std::string s = "below-path " + d.path->word().str();
          if (d.max_distance > 0) s += " depth " + std::to_string(d.max_distance);
          return s;
        }
      },
      d_);
}

Tiling::Tiling(int k, Domain domain, Evaluator eval, std::string provenance)
    : k_(k), domain_(std::move(domain)), eval_(std::move(eval)), provenance_(std::move(provenance)) {}

Scalar Tiling::at(Point p) const {
  if (!domain_.contains(p))
    throw std::domain_error("point (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                            ") outside domain: " + domain_.describe());
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->values.find({p.i, p.j});
    if (it != cache_->values.end()) return it->second;
  }
  Scalar v = eval_(p);
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (cache_->values.size() > (1u << 20)) cache_->values.clear();  // bounded
  return cache_->values.emplace(std::make_pair(p.i, p.j), std::move(v)).first->second;
}

Window window_of(const Tiling& t, Point origin, std::size_t rows, std::size_t cols) {
  Window w(origin, rows, cols);
  if (t.k() > 0) w.set_k(t.k());
  for (long i = origin.i; i < origin.i + static_cast<long>(rows); ++i)
    for (long j = origin.j; j < origin.j + static_cast<long>(cols); ++j)
      w.entry(i, j) = t.at({i, j});
  return w;
}

Tiling translate(const Tiling& t, long p, long q) {
  return Tiling(t.k(), t.domain().translated(p, q),
                [t, p, q](Point pt) { return t.at({pt.i + p, pt.j + q}); },
                "translate(" + std::to_string(p) + "," + std::to_string(q) + ") of " +
                    t.provenance());
}

Tiling transpose(const Tiling& t) {
  return Tiling(t.k(), t.domain().transposed(), [t](Point p) { return t.at({p.j, p.i}); },
                "transpose of " + t.provenance());
}

Tiling wild_sl2(const std::map<std::pair<long, long>, Scalar>& assigned) {
  auto x_value = [assigned](long u, long v) -> Scalar {
    auto it = assigned.find({u, v});
    if (it != assigned.end()) return it->second;
    if (u >= 1 && u <= 5 && v >= 1 && v <= 5) return Scalar((u - 1) * 5 + v);
    return Scalar(0);
  };
  auto eval = [x_value](Point p) -> Scalar {
    long i = p.i, j = p.j;
    auto flo = [](long a) { return a >= 0 ? a / 2 : (a - 1) / 2; };  // floor division
    bool i_even = ((i % 2) + 2) % 2 == 0;
    bool j_even = ((j % 2) + 2) % 2 == 0;
    long u = flo(i), v = flo(j);
    int sign = ((u + v) % 2 + 2) % 2 == 0 ? 1 : -1;
    if (i_even && j_even) return Scalar(sign);
    if (i_even && !j_even) return x_value(u + 1, v + 1);
    if (!i_even && j_even) return Scalar(0);
    return Scalar(sign);
  };
  return Tiling(2, Domain(FullPlane{}), eval, "wild SL2 checkerboard");
}

}  // namespace sltiles
