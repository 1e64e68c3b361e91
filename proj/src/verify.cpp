#include "sltiles/verify.hpp"

#include <sstream>
#include <stdexcept>

namespace sltiles {

std::string VerifyReport::summary() const {
  std::ostringstream out;
  out << "checked " << checked << " minors, " << failures.size() << " failure(s)";
  for (const auto& f : failures)
    out << "\n  at (" << f.anchor.i << "," << f.anchor.j << ") [" << f.what << "] expected "
        << to_string(f.expected) << " got " << to_string(f.got);
  return out.str();
}

VerifyReport verify_slk(const Window& w, int k) {
  if (k <= 0) throw std::invalid_argument("k must be positive");
  if (w.rows() < static_cast<std::size_t>(k) || w.cols() < static_cast<std::size_t>(k))
    throw std::out_of_range("window smaller than k x k");
  VerifyReport rep;
  long i1 = w.origin().i + static_cast<long>(w.rows()) - k;
  long j1 = w.origin().j + static_cast<long>(w.cols()) - k;
  for (long i = w.origin().i; i <= i1; ++i)
    for (long j = w.origin().j; j <= j1; ++j) {
      Scalar m = adjacent_minor(w, i, j, static_cast<std::size_t>(k));
      ++rep.checked;
      if (m != 1) rep.failures.push_back({{i, j}, Scalar(1), m, "adjacent k-minor"});
    }
  return rep;
}

VerifyReport check_tame(const Window& w, int k) {
  if (k <= 0) throw std::invalid_argument("k must be positive");
  std::size_t need = static_cast<std::size_t>(k) + 1;
  if (w.rows() < need || w.cols() < need)
    throw std::out_of_range("window smaller than (k+1) x (k+1)");
  VerifyReport rep;
  long i1 = w.origin().i + static_cast<long>(w.rows()) - k - 1;
  long j1 = w.origin().j + static_cast<long>(w.cols()) - k - 1;
  for (long i = w.origin().i; i <= i1; ++i)
    for (long j = w.origin().j; j <= j1; ++j) {
      Scalar m = adjacent_minor(w, i, j, need);
      ++rep.checked;
      if (m != 0) rep.failures.push_back({{i, j}, Scalar(0), m, "adjacent (k+1)-minor"});
    }
  std::size_t r = rank_of(w);
  ++rep.checked;
  if (r != static_cast<std::size_t>(k))
    rep.failures.push_back(
        {w.origin(), Scalar(k), Scalar(static_cast<long>(r)), "window rank"});
  return rep;
}

}  // namespace sltiles
