// Exact scalar types shared by the whole engine: arbitrary-precision
// integers for series coefficients and reduced rationals for stability
// parameters.  No floating point appears anywhere downstream.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pairpoly {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Largest integer n with n <= r (true floor, also for negative r).
Int rational_floor(const Rational& r);

bool rational_is_integer(const Rational& r);

// Renders "p/q" with q > 0 and gcd(|p|, q) = 1; the denominator is printed
// even when it is 1, so every rational in machine output has one format.
std::string rational_to_string(const Rational& r);

// Accepts "p", "-p", or "p/q" (q > 0 after normalization); rejects decimal
// points and malformed input with std::invalid_argument.
Rational parse_rational(const std::string& s);

// Exact binomial coefficient C(n, r); zero when r < 0 or r > n.
Int binomial(long long n, long long r);

// Checked narrowing for serialization; throws std::overflow_error when the
// value does not fit.
long long to_int64(const Int& v);

}  // namespace pairpoly
