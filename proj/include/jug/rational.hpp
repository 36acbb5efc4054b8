#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace jug {

// Arbitrary-precision integers and rationals. cpp_rational keeps the canonical
// form we require (denominator > 0, fully reduced) on every operation.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

Int factorial(int n);
Int binomial(int n, int k);

// "num/den" with den > 0, e.g. "-7/2"; inverse of parse_rational.
std::string rational_text(const Rational& r);
Rational parse_rational(const std::string& s);

}  // namespace jug
