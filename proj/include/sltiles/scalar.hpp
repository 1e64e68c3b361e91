#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace sltiles {

// All arithmetic in this library is exact. Scalar is an arbitrary-precision
// rational kept in lowest terms with a positive denominator (the backend
// canonicalizes on every operation); Int is the matching integer type.
using Int = boost::multiprecision::cpp_int;
using Scalar = boost::multiprecision::cpp_rational;

inline Int num(const Scalar& s) { return boost::multiprecision::numerator(s); }
inline Int den(const Scalar& s) { return boost::multiprecision::denominator(s); }
inline bool is_integer(const Scalar& s) { return den(s) == 1; }

// Canonical string form: "p" for integers, "p/q" otherwise, q > 0.
std::string to_string(const Scalar& s);

// Accepts optional sign, "p" or "p/q". Throws std::invalid_argument on
// malformed input or zero denominator.
Scalar parse_scalar(const std::string& text);

Scalar pow_scalar(const Scalar& base, long exp);  // throws on 0^negative

Int binomial(long n, long k);  // 0 when k < 0 or k > n (n >= 0 assumed)
Int catalan(long n);

}  // namespace sltiles
