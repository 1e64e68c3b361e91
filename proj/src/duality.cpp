#include "sltiles/duality.hpp"

#include <stdexcept>

namespace sltiles {

Tiling derived(const Tiling& t, std::size_t m) {
  if (m == 0)
    return Tiling(t.k(), Domain(FullPlane{}), [](Point) { return Scalar(1); },
                  "0-derived (all ones)");
  if (m == 1) return t;
  auto eval = [t, m](Point p) {
    ExactMatrix block(m, m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        block.at(a, b) = t.at({p.i + static_cast<long>(a), p.j + static_cast<long>(b)});
    return block.det();
  };
  return Tiling(t.k(), t.domain().shrunk_for_block(m), eval,
                std::to_string(m) + "-derived of " + t.provenance());
}

Tiling dual(const Tiling& t) {
  if (t.k() < 1) throw std::invalid_argument("dual needs the tiling's declared order k");
  return derived(t, static_cast<std::size_t>(t.k() - 1));
}

VerifyReport check_derivation_identity(const Tiling& t, std::size_t r, std::size_t s,
                                       Point origin, std::size_t rows, std::size_t cols) {
  if (r + s != static_cast<std::size_t>(t.k()))
    throw std::invalid_argument("need r + s = k");
  Tiling lhs = derived(dual(t), r);
  Tiling rhs_src = derived(t, s);
  VerifyReport rep;
  long sh = static_cast<long>(r) - 1;  // (r-1, r-1) translation
  for (long i = origin.i; i < origin.i + static_cast<long>(rows); ++i)
    for (long j = origin.j; j < origin.j + static_cast<long>(cols); ++j) {
      Scalar left = lhs.at({i, j});
      Scalar right = rhs_src.at({i + sh, j + sh});
      ++rep.checked;
      if (left != right) rep.failures.push_back({{i, j}, right, left, "derivation identity"});
    }
  return rep;
}

bool condense_check(const Window& a, int k, int h) {
  if (h < 0 || h > k) throw std::invalid_argument("need 0 <= h <= k");
  long need = 2 * static_cast<long>(k) - 1;
  if (static_cast<long>(a.rows()) < need || static_cast<long>(a.cols()) < need)
    throw std::out_of_range("condensation needs a (2k-1) x (2k-1) window");
  if (!verify_slk(a, k).ok()) throw std::domain_error("window is not SLk");
  if (!check_tame(a, k).ok() && static_cast<long>(a.rows()) > k)
    throw std::domain_error("window is not tame");

  long i0 = a.origin().i, j0 = a.origin().j;
  // D = C_22^(k) where C is the (k-1)-derived array of A; in window
  // coordinates C(i,j) is the (k-1)-minor of A anchored at (i,j).
  ExactMatrix d_block(static_cast<std::size_t>(h), static_cast<std::size_t>(h));
  for (int x = 0; x < h; ++x)
    for (int y = 0; y < h; ++y)
      d_block.at(static_cast<std::size_t>(x), static_cast<std::size_t>(y)) =
          adjacent_minor(a, i0 + 1 + x, j0 + 1 + y, static_cast<std::size_t>(k - 1));
  Scalar lhs = d_block.det();
  // B_{h+1,h+1}^{(k-h)}: block of B = A_11^(k) starting at (h, h) 0-indexed
  Scalar rhs = adjacent_minor(a, i0 + h, j0 + h, static_cast<std::size_t>(k - h));
  return lhs == rhs;
}

CoRecursionResult sl3_corecursion(const std::map<Point, Scalar>& seed_a,
                                  const std::map<Point, Scalar>& seed_dual, Point origin,
                                  std::size_t rows, std::size_t cols) {
  std::map<Point, Scalar> a = seed_a, d = seed_dual;
  auto get = [](std::map<Point, Scalar>& m, Point p) -> Scalar* {
    auto it = m.find(p);
    return it == m.end() ? nullptr : &it->second;
  };
  bool progress = true;
  while (progress) {
    progress = false;
    for (long i = origin.i; i < origin.i + static_cast<long>(rows); ++i)
      for (long j = origin.j; j < origin.j + static_cast<long>(cols); ++j) {
        Point p{i, j}, nw{i - 1, j - 1}, n{i - 1, j}, w{i, j - 1};
        if (!get(a, p)) {
          Scalar *anw = get(a, nw), *an = get(a, n), *aw = get(a, w), *dnw = get(d, nw);
          if (anw && an && aw && dnw) {
            if (*anw == 0)
              throw std::domain_error("singular seed: division by zero at (" +
                                      std::to_string(i) + "," + std::to_string(j) + ")");
            a[p] = (*dnw + *an * *aw) / *anw;
            progress = true;
          }
        }
        if (!get(d, p)) {
          Scalar *ap = get(a, p), *dnw = get(d, nw), *dn = get(d, n), *dw = get(d, w);
          if (ap && dnw && dn && dw) {
            if (*dnw == 0)
              throw std::domain_error("singular seed: division by zero at dual (" +
                                      std::to_string(i) + "," + std::to_string(j) + ")");
            d[p] = (*ap + *dn * *dw) / *dnw;
            progress = true;
          }
        }
      }
  }
  auto materialize = [&](const std::map<Point, Scalar>& m) {
    long i_lo = origin.i, j_lo = origin.j, i_hi = origin.i - 1, j_hi = origin.j - 1;
    for (const auto& [p, v] : m) {
      i_hi = std::max(i_hi, p.i);
      j_hi = std::max(j_hi, p.j);
      i_lo = std::min(i_lo, p.i);
      j_lo = std::min(j_lo, p.j);
    }
    // largest rectangle anchored at origin that is fully filled
    std::size_t r = 0, c = 0;
    while (origin.i + static_cast<long>(r) <= i_hi) {
      bool full_row = true;
      for (long j = origin.j; j <= j_hi && full_row; ++j)
        full_row = m.count({origin.i + static_cast<long>(r), j}) > 0;
      if (!full_row) break;
      ++r;
    }
    c = static_cast<std::size_t>(j_hi - origin.j + 1);
    Window w(origin, r, c);
    for (long i = origin.i; i < origin.i + static_cast<long>(r); ++i)
      for (long j = origin.j; j <= j_hi; ++j) w.entry(i, j) = m.at({i, j});
    return w;
  };
  CoRecursionResult out{materialize(a), materialize(d)};
  out.a.set_k(3);
  out.dual.set_k(3);
  return out;
}

CoRecursionResult sl3_corecursion_rect(std::size_t rows, std::size_t cols) {
  std::map<Point, Scalar> a, d;
  for (std::size_t j = 0; j < cols; ++j) {
    a[{0, static_cast<long>(j)}] = 1;
    d[{0, static_cast<long>(j)}] = 1;
  }
  for (std::size_t i = 0; i < rows; ++i) {
    a[{static_cast<long>(i), 0}] = 1;
    d[{static_cast<long>(i), 0}] = 1;
  }
  return sl3_corecursion(a, d, {0, 0}, rows, cols);
}

}  // namespace sltiles
