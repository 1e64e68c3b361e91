#include "sltiles/laurent.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sltiles {

LaurentPoly::LaurentPoly(Int constant) {
  if (constant != 0) terms_.emplace(Monomial{}, std::move(constant));
}

LaurentPoly LaurentPoly::variable(VarId v, long exp) {
  LaurentPoly p;
  if (exp == 0) return LaurentPoly(Int(1));
  p.terms_.emplace(Monomial{{v, exp}}, Int(1));
  return p;
}

LaurentPoly LaurentPoly::monomial(Monomial m, Int coeff) {
  LaurentPoly p;
  p.add_term(m, coeff);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

bool LaurentPoly::is_nonneg() const {
  for (const auto& [m, c] : terms_)
    if (c < 0) return false;
  return true;
}

void LaurentPoly::add_term(const Monomial& m, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
  LaurentPoly out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const { return *this + (-rhs); }

namespace {

Monomial merge_monomials(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      out.push_back(a[i++]);
    } else if (b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      long e = a[i].second + b[j].second;
      if (e != 0) out.emplace_back(a[i].first, e);
      ++i, ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

}  // namespace

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
  LaurentPoly out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(merge_monomials(ma, mb), ca * cb);
  return out;
}

Scalar LaurentPoly::eval(const std::function<Scalar(VarId)>& assignment) const {
  Scalar total(0);
  for (const auto& [m, c] : terms_) {
    Scalar term(c);
    for (const auto& [v, e] : m) {
      Scalar value = assignment(v);
      if (value == 0 && e < 0)
        throw std::domain_error("variable with negative exponent evaluated at zero");
      term *= pow_scalar(value, e);
    }
    total += term;
  }
  return total;
}

std::vector<VarId> LaurentPoly::variables() const {
  std::set<VarId> vs;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m) vs.insert(v);
  return {vs.begin(), vs.end()};
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out += c >= 0 ? " + " : " - ";
    Int mag = first ? c : (c < 0 ? Int(-c) : c);
    first = false;
    std::string mono;
    for (const auto& [v, e] : m) {
      if (!mono.empty()) mono += "*";
      mono += "t(" + std::to_string(v.h) + "," + std::to_string(v.r) + ")";
      if (e != 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace sltiles
