#include "sltiles/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace sltiles {

namespace {

Point step_of(Letter l) { return l == Letter::X ? Point{-1, 0} : Point{0, 1}; }

Point accumulate_steps(const std::vector<Letter>& w) {
  Point d{0, 0};
  for (Letter l : w) {
    Point s = step_of(l);
    d.i += s.i;
    d.j += s.j;
  }
  return d;
}

std::vector<Letter> parse_letters(const std::string& s) {
  std::vector<Letter> out;
  for (char c : s) {
    if (c == ' ' || c == '\t') continue;
    if (c == 'x')
      out.push_back(Letter::X);
    else if (c == 'y')
      out.push_back(Letter::Y);
    else
      throw std::invalid_argument(std::string("unexpected character '") + c + "' in word");
  }
  return out;
}

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t");
  auto b = s.find_last_not_of(" \t");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

std::vector<Letter> parse_period(const std::string& field) {
  std::string t = trim(field);
  if (t.size() < 4 || t.front() != '(' || t.substr(t.size() - 2) != ")*")
    throw std::invalid_argument("periodic field must look like \"(xy)*\": got '" + field + "'");
  auto letters = parse_letters(t.substr(1, t.size() - 3));
  if (letters.empty()) throw std::invalid_argument("empty period in '" + field + "'");
  return letters;
}

std::string letters_str(const std::vector<Letter>& w) {
  std::string s;
  for (Letter l : w) s += (l == Letter::X ? 'x' : 'y');
  return s;
}

}  // namespace

Word::Word(std::vector<Letter> left, std::vector<Letter> core, std::vector<Letter> right,
           Point anchor)
    : left_(std::move(left)), core_(std::move(core)), right_(std::move(right)), anchor_(anchor) {
  if (left_.empty() || right_.empty())
    throw std::invalid_argument("periodic tails of a bi-infinite word must be nonempty");
  core_disp_ = accumulate_steps(core_);
  left_disp_ = accumulate_steps(left_);
  right_disp_ = accumulate_steps(right_);
}

Word Word::parse(const std::string& text) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : text) {
    if (c == '|') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  if (fields.size() != 3)
    throw std::invalid_argument("word syntax is \"(left)* | core | (right)*\": got '" + text + "'");
  return Word(parse_period(fields[0]), parse_letters(trim(fields[1])), parse_period(fields[2]));
}

std::string Word::str() const {
  return "(" + letters_str(left_) + ")*|" + letters_str(core_) + "|(" + letters_str(right_) + ")*";
}

bool Word::admissible() const {
  auto mixed = [](const std::vector<Letter>& p) {
    bool x = false, y = false;
    for (Letter l : p) (l == Letter::X ? x : y) = true;
    return x && y;
  };
  return mixed(left_) && mixed(right_);
}

Letter Word::letter(long n) const {
  if (n >= 0 && n < static_cast<long>(core_.size())) return core_[static_cast<std::size_t>(n)];
  if (n >= 0) {
    long m = (n - static_cast<long>(core_.size())) % static_cast<long>(right_.size());
    return right_[static_cast<std::size_t>(m)];
  }
  long L = static_cast<long>(left_.size());
  long m = ((n % L) + L) % L;
  return left_[static_cast<std::size_t>(m)];
}

Point Word::point_at(long n) const {
  Point p = anchor_;
  auto add = [&](Point d, long times) {
    p.i += d.i * times;
    p.j += d.j * times;
  };
  if (n >= 0) {
    long c = std::min<long>(n, static_cast<long>(core_.size()));
    for (long t = 0; t < c; ++t) add(step_of(core_[static_cast<std::size_t>(t)]), 1);
    long m = n - c;
    if (m > 0) {
      long R = static_cast<long>(right_.size());
      add(right_disp_, m / R);
      for (long t = 0; t < m % R; ++t) add(step_of(right_[static_cast<std::size_t>(t)]), 1);
    }
  } else {
    long m = -n;
    long L = static_cast<long>(left_.size());
    add(left_disp_, -(m / L));
    for (long t = 0; t < m % L; ++t)
      add(step_of(left_[static_cast<std::size_t>(L - 1 - t)]), -1);
  }
  return p;
}

Word Word::transposed() const {
  auto swap_rev = [](const std::vector<Letter>& w) {
    std::vector<Letter> out(w.rbegin(), w.rend());
    for (Letter& l : out) l = swapped(l);
    return out;
  };
  // The reflected point set {(j,i)} traversed in reverse is the path of the
  // reversed-and-swapped word; its core then starts at the reflection of the
  // original core's endpoint.
  Point end = point_at(static_cast<long>(core_.size()));
  return Word(swap_rev(right_), swap_rev(core_), swap_rev(left_), Point{end.j, end.i});
}

FreeGroupWord reduce(FreeGroupWord w) {
  FreeGroupWord out;
  for (const FreeLetter& l : w) {
    if (!out.empty() && out.back().letter == l.letter && out.back().barred != l.barred)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

FreeGroupWord bar_reverse(const FreeGroupWord& w) {
  FreeGroupWord out(w.rbegin(), w.rend());
  for (FreeLetter& l : out) l.barred = !l.barred;
  return out;
}

std::string free_word_str(const FreeGroupWord& w) {
  std::string s;
  for (const FreeLetter& l : w) {
    char c = l.letter == Letter::X ? 'x' : 'y';
    s += l.barred ? static_cast<char>(std::toupper(c)) : c;
  }
  return s;
}

PathGeometry::PathGeometry(Word w) : w_(std::move(w)) {
  if (!w_.admissible())
    throw std::domain_error("word is not admissible: " + w_.str());
  h0_ = w_.anchor().j - w_.anchor().i;
}

namespace {

// Generic monotone search: f is a non-decreasing integer function of n;
// returns the smallest n with f(n) >= target.
template <typename F>
long lower_index(F f, long target) {
  long lo = 0, hi = 0;
  long step = 1;
  while (f(lo) >= target) lo -= step, step *= 2;
  step = 1;
  while (f(hi) < target) hi += step, step *= 2;
  while (lo + 1 < hi) {
    long mid = lo + (hi - lo) / 2;
    (f(mid) < target ? lo : hi) = mid;
  }
  return hi;
}

}  // namespace

long PathGeometry::first_index_in_row(long i) const {
  // row(point_at(n)) is non-increasing in n and hits every integer.
  auto neg_row = [this](long n) { return -point_at(n).i; };
  return lower_index(neg_row, -i);
}

long PathGeometry::last_index_in_row(long i) const { return first_index_in_row(i - 1) - 1; }

long PathGeometry::first_index_in_col(long j) const {
  auto col = [this](long n) { return point_at(n).j; };
  return lower_index(col, j);
}

long PathGeometry::last_index_in_col(long j) const { return first_index_in_col(j + 1) - 1; }

bool PathGeometry::below(Point p) const {
  Point rho = point_on_diagonal(p.j - p.i);
  return p.i >= rho.i;
}

bool PathGeometry::on_path(Point p) const {
  Point rho = point_on_diagonal(p.j - p.i);
  return rho == p;
}

long PathGeometry::distance_below(Point p) const {
  Point rho = point_on_diagonal(p.j - p.i);
  long m = p.i - rho.i;
  if (m < 0) throw std::domain_error("distance is defined for points below the path");
  return m + 1;
}

Point PathGeometry::horizontal_projection(Point p) const {
  return point_at(first_index_in_row(p.i));
}

Point PathGeometry::vertical_projection(Point p) const {
  return point_at(last_index_in_col(p.j));
}

FreeGroupWord PathGeometry::projection_word(Point p) const {
  long n_row = last_index_in_row(p.i);
  long n_col = last_index_in_col(p.j);
  long lo = std::min(n_row, n_col), hi = std::max(n_row, n_col);
  FreeGroupWord seg;
  seg.reserve(static_cast<std::size_t>(hi - lo));
  for (long n = lo; n < hi; ++n) seg.push_back({w_.letter(n), false});
  return below(p) ? seg : bar_reverse(seg);
}

FreeGroupWord PathGeometry::short_projection_word(Point p) const {
  FreeGroupWord w = projection_word(p);
  std::size_t a = 0, b = w.size();
  while (a < b && w[a] == FreeLetter{Letter::X, false}) ++a;
  while (b > a && w[b - 1] == FreeLetter{Letter::Y, false}) --b;
  return FreeGroupWord(w.begin() + static_cast<long>(a), w.begin() + static_cast<long>(b));
}

std::vector<Point> PathGeometry::path_points(long n_lo, long n_hi) const {
  std::vector<Point> pts;
  if (n_hi < n_lo) {
    for (long n = n_lo; n >= n_hi; --n) pts.push_back(point_at(n));
  } else {
    for (long n = n_lo; n <= n_hi; ++n) pts.push_back(point_at(n));
  }
  return pts;
}

std::vector<Letter> PathGeometry::letters(long n_lo, long n_hi) const {
  std::vector<Letter> out;
  for (long n = n_lo; n < n_hi; ++n) out.push_back(w_.letter(n));
  return out;
}

}  // namespace sltiles
