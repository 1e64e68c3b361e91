#include "sltiles/linearization.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sltiles/verify.hpp"

namespace sltiles {

const std::vector<Scalar>& IndexedFamily::at(long idx) const {
  if (empty()) throw std::out_of_range("empty coefficient family");
  if (periodic) {
    long period = hi - lo + 1;
    long m = ((idx - lo) % period + period) % period;
    return vectors[static_cast<std::size_t>(m)];
  }
  if (idx < lo || idx > hi)
    throw std::out_of_range("coefficient index " + std::to_string(idx) + " outside [" +
                            std::to_string(lo) + "," + std::to_string(hi) + "]");
  return vectors[static_cast<std::size_t>(idx - lo)];
}

std::vector<int> relation_solve_signs(int k) {
  // C_j = (-1)^{k+1} C_{j-k} + sum_{m>=1} (-1)^{k+m+1} (lambda_j)_m C_{j-k+m}
  std::vector<int> s(static_cast<std::size_t>(k));
  for (int m = 0; m < k; ++m) s[static_cast<std::size_t>(m)] = ((k + m + 1) % 2 == 0) ? 1 : -1;
  return s;
}

namespace {

// Core of extract/extend: given value lookup on a point set, solve the column
// relation ending at absolute column j. Returns the lambda vector, or throws.
// `rows_with(cols)` must yield rows where all the given columns are assigned.
struct RelationSolver {
  int k;
  std::function<std::optional<Scalar>(Point)> value;

  std::optional<std::vector<Scalar>> solve_column_relation(long j, long row_lo, long row_hi,
                                                           bool* consistent) const {
    // candidate row bands where all of columns j-k..j are assigned
    std::vector<long> usable;
    for (long i = row_lo; i <= row_hi; ++i) {
      bool ok = true;
      for (long c = j - k; c <= j && ok; ++c) ok = value({i, c}).has_value();
      if (ok) usable.push_back(i);
    }
    if (consistent) *consistent = true;
    if (static_cast<long>(usable.size()) < k) return std::nullopt;
    // first nonsingular k x k system scanning downward (rows need not be
    // adjacent, only usable)
    for (std::size_t start = 0; start + static_cast<std::size_t>(k) <= usable.size(); ++start) {
      ExactMatrix M(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
      ExactMatrix rhs(static_cast<std::size_t>(k), 1);
      for (int a = 0; a < k; ++a) {
        long i = usable[start + static_cast<std::size_t>(a)];
        for (int m = 0; m < k; ++m) M.at(static_cast<std::size_t>(a), static_cast<std::size_t>(m)) =
            *value({i, j - k + m});
        rhs.at(static_cast<std::size_t>(a), 0) = *value({i, j});
      }
      if (M.det() == 0) continue;
      ExactMatrix x = M.inverse() * rhs;
      std::vector<Scalar> coeff(static_cast<std::size_t>(k));
      for (int m = 0; m < k; ++m) coeff[static_cast<std::size_t>(m)] = x.at(static_cast<std::size_t>(m), 0);
      // residual check on every other usable row
      for (long i : usable) {
        Scalar acc(0);
        for (int m = 0; m < k; ++m) acc += coeff[static_cast<std::size_t>(m)] * *value({i, j - k + m});
        if (acc != *value({i, j})) {
          if (consistent) *consistent = false;
          return std::nullopt;
        }
      }
      return coeff;
    }
    return std::nullopt;  // all k-row systems singular
  }
};

std::vector<Scalar> lambda_from_coefficients(const std::vector<Scalar>& coeff, int k) {
  auto signs = relation_solve_signs(k);
  if (coeff[0] != Scalar(signs[0]))
    throw not_tame_error("leading recurrence coefficient is not (-1)^{k+1}; window is not an SLk seed");
  std::vector<Scalar> lam(static_cast<std::size_t>(k - 1));
  for (int m = 1; m < k; ++m)
    lam[static_cast<std::size_t>(m - 1)] = Scalar(signs[static_cast<std::size_t>(m)]) *
                                           coeff[static_cast<std::size_t>(m)];
  return lam;
}

}  // namespace

LinearizationData extract_linearization(const Window& w, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (w.rows() < static_cast<std::size_t>(k) || w.cols() < static_cast<std::size_t>(k))
    throw std::out_of_range("window smaller than the k x k seed block");
  long r0 = w.origin().i, c0 = w.origin().j;
  long r1 = r0 + static_cast<long>(w.rows()) - 1, c1 = c0 + static_cast<long>(w.cols()) - 1;

  LinearizationData d;
  d.k = k;
  d.anchor = {r0, c0};
  std::vector<long> I(static_cast<std::size_t>(k)), J(static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a) {
    I[static_cast<std::size_t>(a)] = r0 + a;
    J[static_cast<std::size_t>(a)] = c0 + a;
  }
  d.S = w.submatrix(I, J);
  if (d.S.det() != 1) throw not_tame_error("seed block determinant is not 1");

  RelationSolver solver{k, [&](Point p) -> std::optional<Scalar> {
                          if (!w.contains(p)) return std::nullopt;
                          return w.entry(p.i, p.j);
                        }};
  auto extract_family = [&](long idx_lo, long idx_hi, long band_lo, long band_hi,
                            bool transpose_axes) {
    IndexedFamily fam;
    fam.lo = idx_lo;
    fam.hi = idx_hi;
    for (long j = idx_lo; j <= idx_hi; ++j) {
      bool consistent = true;
      RelationSolver s = solver;
      if (transpose_axes)
        s.value = [&](Point p) -> std::optional<Scalar> {
          Point q{p.j, p.i};
          if (!w.contains(q)) return std::nullopt;
          return w.entry(q.i, q.j);
        };
      auto coeff = s.solve_column_relation(j, band_lo, band_hi, &consistent);
      if (!consistent) throw not_tame_error("relation residual is nonzero: window has rank > k");
      if (!coeff)
        throw not_tame_error("k consecutive columns are dependent near index " + std::to_string(j));
      fam.vectors.push_back(lambda_from_coefficients(*coeff, k));
    }
    return fam;
  };
  d.lambda = extract_family(c0 + k, c1, r0, r1, false);
  d.gamma = extract_family(r0 + k, r1, c0, c1, true);
  return d;
}

namespace {

struct BuildCore {
  LinearizationData d;
  mutable std::map<long, std::vector<Scalar>> band_cols;  // column -> k band values
  mutable std::map<std::pair<long, long>, Scalar> memo;
  mutable std::mutex mu;

  const std::vector<Scalar>& band(long j) const {
    auto it = band_cols.find(j);
    if (it != band_cols.end()) return it->second;
    long aj = d.anchor.j;
    int k = d.k;
    std::vector<Scalar> col(static_cast<std::size_t>(k));
    auto signs = relation_solve_signs(k);
    if (j >= aj && j < aj + k) {
      for (int a = 0; a < k; ++a)
        col[static_cast<std::size_t>(a)] = d.S.at(static_cast<std::size_t>(a),
                                                  static_cast<std::size_t>(j - aj));
    } else if (j >= aj + k) {
      const auto& lam = d.lambda.at(j);
      for (int a = 0; a < k; ++a) {
        Scalar acc = Scalar(signs[0]) * band(j - k)[static_cast<std::size_t>(a)];
        for (int m = 1; m < k; ++m)
          acc += Scalar(signs[static_cast<std::size_t>(m)]) * lam[static_cast<std::size_t>(m - 1)] *
                 band(j - k + m)[static_cast<std::size_t>(a)];
        col[static_cast<std::size_t>(a)] = acc;
      }
    } else {
      // leftward: relation ending at j + k solved for its first column
      const auto& lam = d.lambda.at(j + k);
      for (int a = 0; a < k; ++a) {
        Scalar acc = Scalar(signs[0]) * band(j + k)[static_cast<std::size_t>(a)];
        for (int m = 1; m < k; ++m) {
          int sign = (m + 1) % 2 == 0 ? 1 : -1;  // (-1)^{m+1}
          acc += Scalar(sign) * lam[static_cast<std::size_t>(m - 1)] *
                 band(j + m)[static_cast<std::size_t>(a)];
        }
        col[static_cast<std::size_t>(a)] = acc;
      }
    }
    return band_cols.emplace(j, std::move(col)).first->second;
  }

  Scalar value(Point p) const {
    std::lock_guard<std::mutex> lock(mu);
    return value_unlocked(p);
  }

  Scalar value_unlocked(Point p) const {
    long ai = d.anchor.i;
    int k = d.k;
    if (p.i >= ai && p.i < ai + k) return band(p.j)[static_cast<std::size_t>(p.i - ai)];
    auto it = memo.find({p.i, p.j});
    if (it != memo.end()) return it->second;
    auto signs = relation_solve_signs(k);
    Scalar v;
    if (p.i >= ai + k) {
      const auto& gam = d.gamma.at(p.i);
      Scalar acc = Scalar(signs[0]) * value_unlocked({p.i - k, p.j});
      for (int m = 1; m < k; ++m)
        acc += Scalar(signs[static_cast<std::size_t>(m)]) * gam[static_cast<std::size_t>(m - 1)] *
               value_unlocked({p.i - k + m, p.j});
      v = acc;
    } else {
      const auto& gam = d.gamma.at(p.i + k);
      Scalar acc = Scalar(signs[0]) * value_unlocked({p.i + k, p.j});
      for (int m = 1; m < k; ++m) {
        int sign = (m + 1) % 2 == 0 ? 1 : -1;
        acc += Scalar(sign) * gam[static_cast<std::size_t>(m - 1)] * value_unlocked({p.i + m, p.j});
      }
      v = acc;
    }
    return memo.emplace(std::make_pair(p.i, p.j), std::move(v)).first->second;
  }
};

void validate_data(const LinearizationData& d) {
  if (d.k < 1) throw std::invalid_argument("k must be positive");
  if (d.S.rows() != static_cast<std::size_t>(d.k) || d.S.cols() != static_cast<std::size_t>(d.k))
    throw std::invalid_argument("seed block must be k x k");
  if (d.S.det() != 1) throw std::invalid_argument("seed block determinant must be 1");
  std::size_t m = static_cast<std::size_t>(d.k - 1);
  for (const auto& v : d.lambda.vectors)
    if (v.size() != m) throw std::invalid_argument("lambda vectors must have length k-1");
  for (const auto& v : d.gamma.vectors)
    if (v.size() != m) throw std::invalid_argument("gamma vectors must have length k-1");
}

}  // namespace

Tiling build_from_linearization(const LinearizationData& d) {
  validate_data(d);
  auto core = std::make_shared<BuildCore>();
  core->d = d;
  Domain dom = [&]() -> Domain {
    if (d.lambda.periodic && d.gamma.periodic && !d.lambda.empty() && !d.gamma.empty())
      return Domain(FullPlane{});
    const long inf = std::numeric_limits<long>::max() / 4;
    // A family extends the seed only if its range touches the seed band;
    // otherwise that direction stays at the seed block.
    auto axis = [&](const IndexedFamily& f, long a0) -> std::pair<long, long> {
      long lo = a0, hi = a0 + d.k - 1;
      if (f.periodic && !f.empty()) return {-inf, inf};
      if (!f.empty()) {
        if (f.lo <= a0 + d.k) hi = std::max(hi, f.hi);
        if (f.hi >= a0 + d.k - 1) lo = std::min(lo, f.lo - d.k);
      }
      return {lo, hi};
    };
    auto [i_lo, i_hi] = axis(d.gamma, d.anchor.i);
    auto [j_lo, j_hi] = axis(d.lambda, d.anchor.j);
    return Domain(RectDomain{i_lo, i_hi, j_lo, j_hi});
  }();
  std::ostringstream prov;
  prov << "linearization data anchored at (" << d.anchor.i << "," << d.anchor.j << ") k=" << d.k;
  return Tiling(d.k, dom, [core](Point p) { return core->value(p); }, prov.str());
}

LinearizationData translate_data(const LinearizationData& d) {
  validate_data(d);
  long pivot = d.anchor.i + d.k;
  if (!d.gamma.defined_at(pivot))
    throw std::out_of_range("translate_data needs gamma at the row below the seed block");
  const auto& g = d.gamma.at(pivot);
  int k = d.k;
  ExactMatrix T(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  for (int r = 0; r + 1 < k; ++r) T.at(static_cast<std::size_t>(r), static_cast<std::size_t>(r + 1)) = 1;
  auto signs = relation_solve_signs(k);
  T.at(static_cast<std::size_t>(k - 1), 0) = signs[0];
  for (int m = 1; m < k; ++m)
    T.at(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(m)) =
        Scalar(signs[static_cast<std::size_t>(m)]) * g[static_cast<std::size_t>(m - 1)];

  LinearizationData out;
  out.k = k;
  out.S = T * d.S;
  out.anchor = d.anchor;
  out.lambda = d.lambda;
  out.gamma = d.gamma;
  if (!out.gamma.periodic) {
    out.gamma.lo = d.gamma.lo - 1;
    out.gamma.hi = d.gamma.hi - 1;
  }
  return out;
}

namespace {

nlohmann::json family_to_json(const IndexedFamily& f) {
  nlohmann::json j;
  j["lo"] = f.lo;
  j["hi"] = f.hi;
  j["periodic"] = f.periodic;
  auto rows = nlohmann::json::array();
  for (const auto& v : f.vectors) {
    auto row = nlohmann::json::array();
    for (const auto& s : v) row.push_back(to_string(s));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

IndexedFamily family_from_json(const nlohmann::json& j) {
  IndexedFamily f;
  f.lo = j.at("lo").get<long>();
  f.hi = j.at("hi").get<long>();
  f.periodic = j.at("periodic").get<bool>();
  for (const auto& row : j.at("rows")) {
    std::vector<Scalar> v;
    for (const auto& cell : row)
      v.push_back(cell.is_string() ? parse_scalar(cell.get<std::string>()) : Scalar(cell.get<long>()));
    f.vectors.push_back(std::move(v));
  }
  if (!f.empty() && f.vectors.size() != static_cast<std::size_t>(f.hi - f.lo + 1))
    throw std::invalid_argument("family row count does not match index range");
  return f;
}

}  // namespace

std::string linearization_to_json(const LinearizationData& d) {
  nlohmann::json j;
  j["k"] = d.k;
  j["anchor"] = {d.anchor.i, d.anchor.j};
  auto S = nlohmann::json::array();
  for (std::size_t a = 0; a < d.S.rows(); ++a) {
    auto row = nlohmann::json::array();
    for (std::size_t b = 0; b < d.S.cols(); ++b) row.push_back(to_string(d.S.at(a, b)));
    S.push_back(std::move(row));
  }
  j["S"] = std::move(S);
  j["lambda"] = family_to_json(d.lambda);
  j["gamma"] = family_to_json(d.gamma);
  return j.dump(2) + "\n";
}

LinearizationData linearization_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  LinearizationData d;
  d.k = j.at("k").get<int>();
  if (j.contains("anchor")) d.anchor = {j["anchor"].at(0).get<long>(), j["anchor"].at(1).get<long>()};
  const auto& S = j.at("S");
  d.S = ExactMatrix(S.size(), S.size() ? S[0].size() : 0);
  for (std::size_t a = 0; a < S.size(); ++a)
    for (std::size_t b = 0; b < S[a].size(); ++b)
      d.S.at(a, b) = S[a][b].is_string() ? parse_scalar(S[a][b].get<std::string>())
                                         : Scalar(S[a][b].get<long>());
  d.lambda = family_from_json(j.at("lambda"));
  d.gamma = family_from_json(j.at("gamma"));
  validate_data(d);
  return d;
}

LinearizationData random_linearization_data(int k, long lo, long hi, bool periodic,
                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> small(-2, 2);
  std::uniform_int_distribution<int> rowpick(0, k - 1);
  LinearizationData d;
  d.k = k;
  d.S = ExactMatrix::identity(static_cast<std::size_t>(k));
  // random unimodular seed: a few elementary row operations
  for (int t = 0; t < 3 * k; ++t) {
    int a = rowpick(rng), b = rowpick(rng);
    if (a == b) continue;
    Scalar c(small(rng));
    for (int j = 0; j < k; ++j)
      d.S.at(static_cast<std::size_t>(a), static_cast<std::size_t>(j)) +=
          c * d.S.at(static_cast<std::size_t>(b), static_cast<std::size_t>(j));
  }
  auto fill = [&](IndexedFamily& f) {
    f.lo = lo;
    f.hi = hi;
    f.periodic = periodic;
    for (long i = lo; i <= hi; ++i) {
      std::vector<Scalar> v(static_cast<std::size_t>(k - 1));
      for (auto& s : v) s = Scalar(small(rng));
      f.vectors.push_back(std::move(v));
    }
  };
  fill(d.lambda);
  fill(d.gamma);
  return d;
}

namespace {

struct PointLookup {
  const std::map<Point, Scalar>* values;
  std::optional<Scalar> operator()(Point p) const {
    auto it = values->find(p);
    if (it == values->end()) return std::nullopt;
    return it->second;
  }
};

// Shared back end of the two extension lemmas: extract data from an assigned
// point set and build the reachable tame tiling.
Tiling extend_from_assigned(const std::map<Point, Scalar>& assigned, int k,
                            const std::string& provenance) {
  if (assigned.empty()) throw std::invalid_argument("no assigned values");
  long rmin = assigned.begin()->first.i, rmax = rmin, cmin = assigned.begin()->first.j, cmax = cmin;
  for (const auto& [p, v] : assigned) {
    rmin = std::min(rmin, p.i), rmax = std::max(rmax, p.i);
    cmin = std::min(cmin, p.j), cmax = std::max(cmax, p.j);
  }
  PointLookup look{&assigned};

  // anchor: topmost-leftmost fully assigned k x k block
  std::optional<Point> anchor;
  for (long i = rmin; i <= rmax - k + 1 && !anchor; ++i)
    for (long j = cmin; j <= cmax - k + 1 && !anchor; ++j) {
      bool full = true;
      for (long a = 0; a < k && full; ++a)
        for (long b = 0; b < k && full; ++b) full = look({i + a, j + b}).has_value();
      if (full) anchor = Point{i, j};
    }
  if (!anchor) throw std::invalid_argument("no fully assigned k x k block to anchor the seed");

  LinearizationData d;
  d.k = k;
  d.anchor = *anchor;
  d.S = ExactMatrix(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  for (long a = 0; a < k; ++a)
    for (long b = 0; b < k; ++b)
      d.S.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) =
          *look({anchor->i + a, anchor->j + b});
  if (d.S.det() != 1) throw not_tame_error("anchored seed block determinant is not 1");

  RelationSolver solver{k, [&](Point p) { return look(p); }};
  auto harvest = [&](bool transposed) {
    IndexedFamily fam;
    std::vector<std::pair<long, std::vector<Scalar>>> found;
    RelationSolver s = solver;
    if (transposed)
      s.value = [&](Point p) { return look({p.j, p.i}); };
    long idx_min = transposed ? rmin : cmin, idx_max = transposed ? rmax : cmax;
    long band_lo = transposed ? cmin : rmin, band_hi = transposed ? cmax : rmax;
    for (long j = idx_min + k; j <= idx_max; ++j) {
      bool consistent = true;
      auto coeff = s.solve_column_relation(j, band_lo, band_hi, &consistent);
      if (!consistent)
        throw not_tame_error("assigned values violate the rank-k relations at index " +
                             std::to_string(j));
      if (coeff) found.emplace_back(j, lambda_from_coefficients(*coeff, k));
    }
    if (found.empty()) return fam;
    // keep the longest contiguous run containing the seed block if possible
    fam.lo = found.front().first;
    fam.hi = found.back().first;
    long expect = fam.lo;
    for (const auto& [idx, vec] : found) {
      if (idx != expect)
        throw std::invalid_argument("assigned region leaves gaps in the recurrence coverage");
      fam.vectors.push_back(vec);
      ++expect;
    }
    return fam;
  };
  d.lambda = harvest(false);
  d.gamma = harvest(true);

  Tiling t = build_from_linearization(d);
  // the built tiling must reproduce every assigned value inside its domain
  for (const auto& [p, v] : assigned) {
    if (!t.domain().contains(p)) continue;
    if (t.at(p) != v)
      throw not_tame_error("extension disagrees with an assigned value at (" +
                           std::to_string(p.i) + "," + std::to_string(p.j) + ")");
  }
  return Tiling(t.k(), t.domain(), [t](Point p) { return t.at(p); }, provenance);
}

}  // namespace

Tiling extend_below_path(const PartialTiling& p, int k) {
  PointLookup look{&p.assigned};
  // precondition scan over fully assigned blocks
  for (const auto& [pt, v] : p.assigned) {
    for (int size : {k, k + 1}) {
      bool full = true;
      for (long a = 0; a < size && full; ++a)
        for (long b = 0; b < size && full; ++b) full = look({pt.i + a, pt.j + b}).has_value();
      if (!full) continue;
      std::vector<long> I(static_cast<std::size_t>(size)), J(static_cast<std::size_t>(size));
      ExactMatrix M(static_cast<std::size_t>(size), static_cast<std::size_t>(size));
      for (long a = 0; a < size; ++a)
        for (long b = 0; b < size; ++b)
          M.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = *look({pt.i + a, pt.j + b});
      Scalar want = size == k ? Scalar(1) : Scalar(0);
      if (M.det() != want)
        throw not_tame_error("adjacent " + std::to_string(size) + "-minor at (" +
                             std::to_string(pt.i) + "," + std::to_string(pt.j) + ") equals " +
                             to_string(M.det()) + ", expected " + to_string(want));
    }
  }
  return extend_from_assigned(p.assigned, k,
                              "below-path extension of " + p.word.str() + " k=" + std::to_string(k));
}

Tiling extend_from_fringe(const Word& w, const FringeValues& values, int k) {
  if (values.empty()) throw std::invalid_argument("empty fringe assignment");
  PathGeometry geo(w);
  long h_lo = values.begin()->first.first, h_hi = h_lo;
  for (const auto& [key, v] : values) {
    h_lo = std::min(h_lo, key.first);
    h_hi = std::max(h_hi, key.first);
  }
  for (long h = h_lo; h <= h_hi; ++h)
    for (int r = 1; r < k; ++r)
      if (!values.count({h, r}))
        throw std::invalid_argument("fringe assignment missing t(" + std::to_string(h) + "," +
                                    std::to_string(r) + ")");

  std::map<Point, Scalar> assigned;
  for (const auto& [key, v] : values) {
    Point base = geo.point_on_diagonal(key.first);
    assigned[{base.i + key.second - 1, base.j + key.second - 1}] = v;
  }

  // principal minors of orders 1..k-1 must be nonzero where they fit
  PointLookup look{&assigned};
  for (long h = h_lo; h <= h_hi; ++h) {
    Point base = geo.point_on_diagonal(h);
    for (int r = 1; r < k; ++r) {
      ExactMatrix M(static_cast<std::size_t>(r), static_cast<std::size_t>(r));
      bool full = true;
      for (int a = 0; a < r && full; ++a)
        for (int b = 0; b < r && full; ++b) {
          auto v = look({base.i + a, base.j + b});
          if (!v)
            full = false;
          else
            M.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = *v;
        }
      if (!full) continue;
      if (M.det() == 0)
        throw std::domain_error("singular fringe: principal minor of order " + std::to_string(r) +
                                " on diagonal " + std::to_string(h) + " vanishes");
    }
  }

  // Complete the k-fringe: each diagonal's distance-k value is pinned by some
  // principal k x k minor being 1. Iterate, solving any block with a single
  // unknown whose cofactor is nonzero.
  std::set<long> unsolved;
  for (long h = h_lo + k - 1; h <= h_hi - k + 1; ++h) unsolved.insert(h);
  bool progress = true;
  while (!unsolved.empty() && progress) {
    progress = false;
    for (long h = h_lo; h <= h_hi - k + 1; ++h) {
      Point base = geo.point_on_diagonal(h);
      // collect block entries; missing ones must be unsolved fringe corners
      std::vector<Point> missing;
      ExactMatrix M(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
      bool blocked = false;
      for (int a = 0; a < k && !blocked; ++a)
        for (int b = 0; b < k && !blocked; ++b) {
          Point q{base.i + a, base.j + b};
          auto v = look(q);
          if (v) {
            M.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = *v;
          } else if (geo.below(q) && geo.distance_below(q) == k) {
            missing.push_back(q);
          } else {
            blocked = true;  // outside the currently known region
          }
        }
      if (blocked || missing.size() != 1) continue;
      Point q = missing.front();
      int qa = static_cast<int>(q.i - base.i), qb = static_cast<int>(q.j - base.j);
      // det(M) = 1 with the unknown entering linearly through its cofactor
      ExactMatrix sub(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(k - 1));
      for (int a = 0, sa = 0; a < k; ++a) {
        if (a == qa) continue;
        for (int b = 0, sb = 0; b < k; ++b) {
          if (b == qb) continue;
          sub.at(static_cast<std::size_t>(sa), static_cast<std::size_t>(sb)) =
              M.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
          ++sb;
        }
        ++sa;
      }
      Scalar cof = Scalar((qa + qb) % 2 == 0 ? 1 : -1) * sub.det();
      if (cof == 0) continue;
      M.at(static_cast<std::size_t>(qa), static_cast<std::size_t>(qb)) = 0;
      Scalar rest = M.det();
      assigned[q] = (Scalar(1) - rest) / cof;
      unsolved.erase(q.j - q.i);
      progress = true;
    }
  }
  if (!unsolved.empty())
    throw std::domain_error("could not complete the k-fringe from the given values");

  return extend_from_assigned(assigned, k,
                              "fringe extension of " + w.str() + " k=" + std::to_string(k));
}

Tiling suppress_line(const Tiling& t, LineKind which, long index, long check_lo, long check_hi) {
  if (t.k() != 2) throw std::invalid_argument("line suppression is an SL2 operation");
  for (long s = check_lo; s <= check_hi; ++s) {
    Point mid = which == LineKind::Column ? Point{s, index} : Point{index, s};
    Point prev = which == LineKind::Column ? Point{s, index - 1} : Point{index - 1, s};
    Point next = which == LineKind::Column ? Point{s, index + 1} : Point{index + 1, s};
    if (t.at(mid) != t.at(prev) + t.at(next))
      throw std::domain_error("line " + std::to_string(index) +
                              " is not the sum of its neighbors at transverse index " +
                              std::to_string(s));
  }
  auto eval = [t, which, index](Point p) {
    Point q = p;
    if (which == LineKind::Column && p.j >= index) q.j = p.j + 1;
    if (which == LineKind::Row && p.i >= index) q.i = p.i + 1;
    return t.at(q);
  };
  // domain: a full plane stays full; rectangles lose one line
  Domain dom = t.domain();
  return Tiling(2, dom, eval,
                std::string(which == LineKind::Column ? "column" : "row") + " " +
                    std::to_string(index) + " suppressed from " + t.provenance());
}

}  // namespace sltiles
