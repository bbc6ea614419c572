#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace syz {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact rational p/q. Throws std::invalid_argument on q == 0.
Rational make_rational(const Integer& p, const Integer& q);
Rational make_rational(std::int64_t p, std::int64_t q);

/// floor(x) as an exact integer (rounds toward -infinity).
Integer floor_rational(const Rational& x);

/// Canonical text form "p/q" with q > 0 and gcd(p,q) = 1; "/1" is omitted.
std::string to_pq_string(const Rational& x);

/// Parses to_pq_string output (optionally signed, optional "/q" part).
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_pq_string(const std::string& text);

/// Nearest double; used only for --approx display, never for comparisons.
double approx(const Rational& x);

} // namespace syz
