#include "sltiles/path_tilings.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sltiles {

namespace {

ExactMatrix shift_matrix(int k) {
  ExactMatrix n(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  for (int i = 0; i + 1 < k; ++i) n.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1)) = 1;
  return n;
}

struct MuBasis {
  ExactMatrix x, y, x_inv, y_inv;
};

MuBasis mu_basis(int k) {
  ExactMatrix n = shift_matrix(k);
  ExactMatrix id = ExactMatrix::identity(static_cast<std::size_t>(k));
  ExactMatrix x = id, x_inv = id;
  ExactMatrix pow = id;
  // (Id + N)^{-1} = sum_{ i < k } (-N)^i, exact since N is nilpotent.
  for (int i = 1; i < k; ++i) {
    pow = pow * n;
    for (std::size_t a = 0; a < x.rows(); ++a)
      for (std::size_t b = 0; b < x.cols(); ++b) {
        if (i == 1) x.at(a, b) += pow.at(a, b);
        x_inv.at(a, b) += (i % 2 ? Scalar(-1) : Scalar(1)) * pow.at(a, b);
      }
  }
  return {x, x.transposed(), x_inv, x_inv.transposed()};
}

}  // namespace

ExactMatrix mu(const FreeGroupWord& w, int k) {
  if (k <= 0) throw std::invalid_argument("k must be positive");
  MuBasis b = mu_basis(k);
  ExactMatrix m = ExactMatrix::identity(static_cast<std::size_t>(k));
  for (const FreeLetter& l : w) {
    const ExactMatrix& f = l.letter == Letter::X ? (l.barred ? b.x_inv : b.x)
                                                 : (l.barred ? b.y_inv : b.y);
    m = m * f;
  }
  return m;
}

ExactMatrix mu_prime(const FreeGroupWord& w, int k) {
  // mu'(x) = (Id - N)^{-1} = sum N^i, mu'(y) its transpose; barred letters
  // invert as usual.
  if (k <= 0) throw std::invalid_argument("k must be positive");
  ExactMatrix n = shift_matrix(k);
  ExactMatrix id = ExactMatrix::identity(static_cast<std::size_t>(k));
  ExactMatrix x = id, x_inv = id, pow = id;
  for (int i = 1; i < k; ++i) {
    pow = pow * n;
    for (std::size_t a = 0; a < x.rows(); ++a)
      for (std::size_t b = 0; b < x.cols(); ++b) {
        x.at(a, b) += pow.at(a, b);
        if (i == 1) x_inv.at(a, b) -= pow.at(a, b);
      }
  }
  ExactMatrix y = x.transposed(), y_inv = x_inv.transposed();
  ExactMatrix m = id;
  for (const FreeLetter& l : w) {
    const ExactMatrix& f =
        l.letter == Letter::X ? (l.barred ? x_inv : x) : (l.barred ? y_inv : y);
    m = m * f;
  }
  return m;
}

Scalar mu_corner(const ExactMatrix& m) { return m.at(m.rows() - 1, m.cols() - 1); }

Tiling path_tiling(const Word& w, int k) {
  if (!w.admissible()) throw std::domain_error("word is not admissible: " + w.str());
  auto geo = std::make_shared<PathGeometry>(w);
  auto eval = [geo, k](Point p) { return mu_corner(mu(geo->projection_word(p), k)); };
  return Tiling(k, Domain(FullPlane{}), eval, "path tiling of " + w.str() + " k=" + std::to_string(k));
}

namespace {

struct Enumeration {
  const PathGeometry& geo;
  int k;
  long long budget;

  void spend() {
    if (--budget < 0) throw std::runtime_error("noncrossing enumeration budget exceeded");
  }

  bool in_fringe(Point p) const { return geo.in_fringe(p, k); }

  // Depth-first walk of one path from `cur` to `goal` (steps up / right),
  // avoiding `used`; on completion recurses into the next source/target pair.
  Int walk(Point cur, Point goal, std::set<Point>& used,
           const std::vector<Point>& sources, const std::vector<Point>& targets,
           std::size_t next_pair) {
    spend();
    if (cur == goal) return finish_pair(used, sources, targets, next_pair);
    Int total = 0;
    for (Point step : {Point{-1, 0}, Point{0, 1}}) {
      Point nxt{cur.i + step.i, cur.j + step.j};
      if (nxt.i < goal.i || nxt.j > goal.j) continue;
      if (!in_fringe(nxt) || used.count(nxt)) continue;
      used.insert(nxt);
      total += walk(nxt, goal, used, sources, targets, next_pair);
      used.erase(nxt);
    }
    return total;
  }

  Int finish_pair(std::set<Point>& used, const std::vector<Point>& sources,
                  const std::vector<Point>& targets, std::size_t pair) {
    if (pair == sources.size()) return 1;
    Point s = sources[pair], t = targets[pair];
    if (used.count(s) || used.count(t)) return 0;
    if (s.i < t.i || s.j > t.j) return 0;  // unreachable with up/right steps
    used.insert(s);
    Int n = walk(s, t, used, sources, targets, pair + 1);
    used.erase(s);
    return n;
  }
};

}  // namespace

Int count_noncrossing(const Word& w, int k, const std::vector<long>& I,
                      const std::vector<long>& J, long long budget) {
  if (I.size() != J.size()) throw std::invalid_argument("count_noncrossing needs |I| == |J|");
  if (I.empty()) return 1;
  PathGeometry geo(w);
  std::vector<long> rows = I, cols = J;
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  for (long i : rows)
    for (long j : cols)
      if (!geo.below({i, j}))
        throw std::domain_error("row/column set is not below the path");
  std::vector<Point> sources, targets;
  for (std::size_t s = 0; s < rows.size(); ++s) {
    sources.push_back(geo.horizontal_projection({rows[s], 0}));
    targets.push_back(geo.vertical_projection({0, cols[s]}));
  }
  Enumeration e{geo, k, budget};
  std::set<Point> used;
  return e.finish_pair(used, sources, targets, 0);
}

WeightedTiling::WeightedTiling(Word w, int k)
    : k_(k), path_(std::make_shared<PathGeometry>(std::move(w))) {
  if (k_ < 2) throw std::invalid_argument("weighted tilings need k >= 2");
}

namespace {

// nu(p) = t(h, r) / t(h, r-1) as a sparse exponent vector, with t(h, r) = 1
// outside 1 <= r <= k-1.
Monomial nu_exponents(Point p, long r, int k) {
  Monomial m;
  long h = p.j - p.i;
  if (r >= 1 && r <= k - 1) m.push_back({{h, static_cast<int>(r)}, 1});
  if (r - 1 >= 1 && r - 1 <= k - 1) m.push_back({{h, static_cast<int>(r - 1)}, -1});
  std::sort(m.begin(), m.end());
  return m;
}

Monomial merge_exp(const Monomial& a, const Monomial& b, int sign) {
  Monomial out = a;
  for (auto [v, e] : b) {
    e *= sign;
    bool found = false;
    for (auto& [w, f] : out)
      if (w == v) {
        f += e;
        found = true;
        break;
      }
    if (!found) out.push_back({v, e});
  }
  Monomial clean;
  for (auto& [v, e] : out)
    if (e != 0) clean.push_back({v, e});
  std::sort(clean.begin(), clean.end());
  return clean;
}

}  // namespace

LaurentPoly WeightedTiling::at(Point p) const {
  if (!path_->below(p)) throw std::domain_error("weighted tiling is defined below the path only");
  auto it = memo_.find({p.i, p.j});
  if (it != memo_.end()) return it->second;

  Point start = path_->horizontal_projection(p);
  Point goal = path_->vertical_projection(p);
  LaurentPoly total;

  // Depth-first enumeration over monotone paths in the k-fringe, carrying the
  // turn weights along. `came_right` tracks the direction of the last step.
  struct Walker {
    const PathGeometry& geo;
    int k;
    Point goal;
    LaurentPoly* total;

    void go(Point cur, Monomial weight, int last_step /*0 none, 1 up, 2 right*/) {
      if (cur == goal) {
        // beta factor: nu(end) when the path arrives by a horizontal step
        if (last_step == 2) weight = merge_exp(weight, nu_exponents(cur, geo.distance_below(cur), k), 1);
        *total = *total + LaurentPoly::monomial(weight, Int(1));
        return;
      }
      for (int dir : {1, 2}) {
        Point nxt = dir == 1 ? Point{cur.i - 1, cur.j} : Point{cur.i, cur.j + 1};
        if (nxt.i < goal.i || nxt.j > goal.j) continue;
        if (!geo.in_fringe(nxt, k)) continue;
        Monomial w2 = weight;
        long r = geo.distance_below(cur);
        if (last_step == 2 && dir == 1) w2 = merge_exp(w2, nu_exponents(cur, r, k), 1);   // left turn
        if (last_step == 1 && dir == 2) w2 = merge_exp(w2, nu_exponents(cur, r, k), -1);  // right turn
        if (last_step == 0 && dir == 1) w2 = merge_exp(w2, nu_exponents(cur, r, k), 1);   // alpha factor
        go(nxt, std::move(w2), dir);
      }
    }
  };

  if (start == goal) {
    // the empty path at the common projection point weighs nu of that point
    total = LaurentPoly::monomial(nu_exponents(start, path_->distance_below(start), k_), Int(1));
  } else {
    Walker w{*path_, k_, goal, &total};
    w.go(start, Monomial{}, 0);
  }
  memo_.emplace(std::make_pair(p.i, p.j), total);
  return total;
}

LaurentPoly WeightedTiling::minor(const std::vector<long>& I, const std::vector<long>& J) const {
  if (I.size() != J.size()) throw std::invalid_argument("minor needs |I| == |J|");
  std::size_t n = I.size();
  if (n == 0) return LaurentPoly(Int(1));
  // Leibniz expansion; minors here stay small (r < k <= 4).
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  LaurentPoly det;
  do {
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    LaurentPoly prod(Int(inversions % 2 ? -1 : 1));
    for (std::size_t a = 0; a < n; ++a) prod = prod * at({I[a], J[perm[a]]});
    det = det + prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

LaurentPoly WeightedTiling::principal_minor(long h, int r) const {
  Point anchor = path_->point_on_diagonal(h);
  std::vector<long> I(static_cast<std::size_t>(r)), J(static_cast<std::size_t>(r));
  for (int a = 0; a < r; ++a) {
    I[static_cast<std::size_t>(a)] = anchor.i + a;
    J[static_cast<std::size_t>(a)] = anchor.j + a;
  }
  return minor(I, J);
}

Scalar WeightedTiling::at_all_ones(Point p) const {
  return at(p).eval([](VarId) { return Scalar(1); });
}

}  // namespace sltiles
