#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sltiles/scalar.hpp"

namespace sltiles {

// Variable t(h, r): h indexes a diagonal (any integer), r a depth 1..k-1.
// Variables are created on demand; the set is unbounded in h.
struct VarId {
  long h = 0;
  int r = 1;
  auto operator<=>(const VarId&) const = default;
};

// A monomial is a sparse exponent vector, sorted by variable, no zero
// exponents (the empty monomial is the constant 1). Exponents may be negative.
using Monomial = std::vector<std::pair<VarId, long>>;

// Sparse multivariate Laurent polynomial with exact integer coefficients.
// Canonical form stores no zero coefficients, so the zero polynomial has an
// empty term map and equality is structural.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(Int constant);
  static LaurentPoly variable(VarId v, long exp = 1);
  static LaurentPoly monomial(Monomial m, Int coeff);

  const std::map<Monomial, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_nonneg() const;  // every coefficient >= 0

  LaurentPoly operator+(const LaurentPoly& rhs) const;
  LaurentPoly operator-(const LaurentPoly& rhs) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& rhs) const;
  bool operator==(const LaurentPoly& rhs) const = default;

  // Evaluates with the given assignment (must cover every variable that
  // occurs; a zero value hitting a negative exponent is a domain error).
  Scalar eval(const std::function<Scalar(VarId)>& assignment) const;

  std::vector<VarId> variables() const;
  std::string str() const;  // e.g. "t(0,1)*t(1,2)^-1 + 2"

 private:
  void add_term(const Monomial& m, const Int& c);
  std::map<Monomial, Int> terms_;
};

}  // namespace sltiles
