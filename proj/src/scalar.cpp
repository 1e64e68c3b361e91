#include "sltiles/scalar.hpp"

#include <cctype>

namespace sltiles {

std::string to_string(const Scalar& s) {
  std::string out = num(s).str();
  if (!is_integer(s)) {
    out += "/";
    out += den(s).str();
  }
  return out;
}

namespace {

bool valid_int_token(const std::string& t) {
  if (t.empty()) return false;
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  return true;
}

}  // namespace

Scalar parse_scalar(const std::string& text) {
  std::string t = text;
  // strip surrounding whitespace
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  std::size_t slash = t.find('/');
  if (slash == std::string::npos) {
    if (!valid_int_token(t)) throw std::invalid_argument("bad rational literal: '" + text + "'");
    return Scalar(Int(t));
  }
  std::string p = t.substr(0, slash), q = t.substr(slash + 1);
  if (!valid_int_token(p) || !valid_int_token(q))
    throw std::invalid_argument("bad rational literal: '" + text + "'");
  Int d(q);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Scalar(Int(p), d);
}

Scalar pow_scalar(const Scalar& base, long exp) {
  if (exp == 0) return Scalar(1);
  bool invert = exp < 0;
  if (invert && base == 0) throw std::domain_error("0 raised to a negative power");
  unsigned long e = invert ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
  Scalar acc(1), b = base;
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return invert ? Scalar(1) / acc : acc;
}

Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact at every step
  }
  return r;
}

Int catalan(long n) { return binomial(2 * n, n) / Int(n + 1); }

}  // namespace sltiles
