#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace kptau {

// All coefficients in this library are exact rationals. cpp_rational keeps
// numerator/denominator in lowest terms with a positive denominator, so the
// canonical-form invariant holds for free.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders a rational as "p" or "p/q" (q > 1), with no whitespace.
std::string rational_to_string(const Rational& r);

/// Parses "p" or "p/q". Throws std::invalid_argument on malformed input
/// (including q == 0, embedded whitespace, or decimal points).
Rational rational_from_string(std::string_view s);

Integer factorial(int n);

/// n!! for n >= -1, with (-1)!! = 0!! = 1.
Integer double_factorial(int n);

/// Binomial coefficient, zero for k < 0 or k > n.
Integer binomial(int n, int k);

/// Falling factorial m(m-1)...(m-j+1) for j >= 0 and any integer m.
Integer falling_factorial(long long m, int j);

}  // namespace kptau
