#include "sltiles/window.hpp"

#include <stdexcept>

namespace sltiles {

Window::Window(Point origin, std::size_t rows, std::size_t cols)
    : origin_(origin), rows_(rows), cols_(cols), e_(rows * cols, Scalar(0)) {}

Scalar& Window::entry(long i, long j) {
  if (!contains({i, j}))
    throw std::out_of_range("window entry (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside window");
  return e_[static_cast<std::size_t>(i - origin_.i) * cols_ + static_cast<std::size_t>(j - origin_.j)];
}

const Scalar& Window::entry(long i, long j) const {
  return const_cast<Window*>(this)->entry(i, j);
}

Window Window::transposed() const {
  Window t({origin_.j, origin_.i}, cols_, rows_);
  t.k_ = k_;
  for (long i = origin_.i; i < origin_.i + static_cast<long>(rows_); ++i)
    for (long j = origin_.j; j < origin_.j + static_cast<long>(cols_); ++j)
      t.entry(j, i) = entry(i, j);
  return t;
}

Window Window::translated(long p, long q) const {
  Window t({origin_.i - p, origin_.j - q}, rows_, cols_);
  t.k_ = k_;
  for (std::size_t n = 0; n < e_.size(); ++n) t.e_[n] = e_[n];
  return t;
}

ExactMatrix Window::submatrix(const std::vector<long>& I, const std::vector<long>& J) const {
  ExactMatrix m(I.size(), J.size());
  for (std::size_t a = 0; a < I.size(); ++a)
    for (std::size_t b = 0; b < J.size(); ++b) m.at(a, b) = entry(I[a], J[b]);
  return m;
}

Scalar minor_of(const Window& w, const std::vector<long>& I, const std::vector<long>& J) {
  if (I.size() != J.size()) throw std::invalid_argument("minor needs |I| == |J|");
  if (I.empty()) return 1;
  return w.submatrix(I, J).det();
}

Scalar adjacent_minor(const Window& w, long i, long j, std::size_t m) {
  std::vector<long> I(m), J(m);
  for (std::size_t a = 0; a < m; ++a) {
    I[a] = i + static_cast<long>(a);
    J[a] = j + static_cast<long>(a);
  }
  return minor_of(w, I, J);
}

bool dodgson_check(const Window& w, long i, long j, std::size_t r) {
  Scalar lhs = adjacent_minor(w, i, j, r + 1) * adjacent_minor(w, i + 1, j + 1, r - 1);
  Scalar rhs = adjacent_minor(w, i, j, r) * adjacent_minor(w, i + 1, j + 1, r) -
               adjacent_minor(w, i, j + 1, r) * adjacent_minor(w, i + 1, j, r);
  return lhs == rhs;
}

std::size_t rank_of(const Window& w) {
  std::vector<long> I(w.rows()), J(w.cols());
  for (std::size_t a = 0; a < w.rows(); ++a) I[a] = w.origin().i + static_cast<long>(a);
  for (std::size_t b = 0; b < w.cols(); ++b) J[b] = w.origin().j + static_cast<long>(b);
  return w.submatrix(I, J).rank();
}

namespace {

void require_reflectable(int k) {
  int m = ((k % 4) + 4) % 4;
  if (m == 2 || m == 3)
    throw std::domain_error("reflection flips the sign of k x k determinants for k = 2,3 mod 4");
}

}  // namespace

Window reflect_rows(const Window& w, int k) {
  require_reflectable(k);
  Window out(w.origin(), w.rows(), w.cols());
  if (w.k()) out.set_k(*w.k());
  long top = w.origin().i, bot = top + static_cast<long>(w.rows()) - 1;
  for (long i = top; i <= bot; ++i)
    for (long j = w.origin().j; j < w.origin().j + static_cast<long>(w.cols()); ++j)
      out.entry(i, j) = w.entry(top + bot - i, j);
  return out;
}

Window reflect_cols(const Window& w, int k) {
  require_reflectable(k);
  return reflect_rows(w.transposed(), k).transposed();
}

}  // namespace sltiles
