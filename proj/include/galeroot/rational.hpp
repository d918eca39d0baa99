// Exact rational scalars used throughout the symbolic layer.
//
// Rational is an arbitrary-precision fraction that is always stored in
// lowest terms with a positive denominator; BigInt is its integer
// counterpart.  Everything downstream (bivariate polynomials, basis
// conversion matrices, dual-matrix identities) relies on this exactness.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace galeroot {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }
inline long double to_long_double(const Rational& q) { return q.template convert_to<long double>(); }

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned t = 2; t <= n; ++t) f *= t;
    return f;
}

/// C(n, k) for integer n >= 0, zero when k out of range.
inline BigInt binomial_int(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt b = 1;
    for (unsigned t = 0; t < k; ++t) {
        b *= (n - t);
        b /= (t + 1);
    }
    return b;
}

/// Parses "p", "-p/q" or a plain decimal like "0.5" into an exact rational.
Rational parse_rational(const std::string& text);

std::string rational_to_string(const Rational& q);

}  // namespace galeroot
