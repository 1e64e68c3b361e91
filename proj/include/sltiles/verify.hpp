#pragma once

#include <string>
#include <vector>

#include "sltiles/window.hpp"

namespace sltiles {

struct VerifyFailure {
  Point anchor;
  Scalar expected;
  Scalar got;
  std::string what;  // which check produced it
};

struct VerifyReport {
  std::size_t checked = 0;
  std::vector<VerifyFailure> failures;
  bool ok() const { return failures.empty(); }
  std::string summary() const;
};

// Checks every adjacent k x k minor fully inside the window against 1.
// Throws std::out_of_range if the window is smaller than k x k.
VerifyReport verify_slk(const Window& w, int k);

// Window-level tameness proxy: every adjacent (k+1)x(k+1) minor inside the
// window vanishes and the window has rank exactly k (so some k consecutive
// rows are independent). Requires at least a (k+1)x(k+1) window.
VerifyReport check_tame(const Window& w, int k);

}  // namespace sltiles
