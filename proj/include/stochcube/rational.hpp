#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace stochcube {

// All scalar arithmetic in the library is exact. Rationals are kept in
// lowest terms with a positive denominator (the backing type maintains the
// canonical form on every operation).
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "-p", "p/q" or a decimal literal such as "0.6" into an exact
// rational (0.6 -> 3/5). Surrounding whitespace is ignored. Throws
// ParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical rendering: plain integer when the denominator is 1, otherwise
// "p/q" in lowest terms with q > 0.
std::string format_rational(const Rational& value);

// Largest integer <= value.
Integer rational_floor(const Rational& value);

}  // namespace stochcube
