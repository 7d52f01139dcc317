// rational.hpp - exact rationals for bound arithmetic.

#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sidon {

using Rational = boost::multiprecision::cpp_rational;

// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& r);

// Decimal rendering with the given number of significant digits.
std::string format_decimal(const Rational& r, int significant = 6);

// Fixed-point rendering with the given number of digits after the point.
std::string format_fixed(const Rational& r, int digits);

}  // namespace sidon
