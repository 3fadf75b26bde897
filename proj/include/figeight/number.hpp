#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace figeight {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Integer den(const Rational& x) { return boost::multiprecision::denominator(x); }

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

/// p/q for any nonzero q (the Boost constructor rejects negative q).
/// Throws std::domain_error for q = 0.
Rational ratio(const Integer& p, const Integer& q);

/// Largest integer <= x.
Integer floor(const Rational& x);
/// Smallest integer >= x.
Integer ceil(const Rational& x);

inline bool is_integer(const Rational& x) { return den(x) == 1; }

struct Bezout {
  Integer gcd;
  Integer x;
  Integer y;
};
/// gcd(a, b) >= 0 together with x, y such that a x + b y = gcd.
Bezout extended_gcd(const Integer& a, const Integer& b);

/// Parses `n` or `p/q` (optionally signed). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
/// Prints `n` or `p/q` with the sign on the numerator.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

}  // namespace figeight
