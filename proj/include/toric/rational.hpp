#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace toric {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// n/d with the sign moved to the numerator (cpp_rational rejects d < 0).
Rational make_rational(const Integer& n, const Integer& d);

/// Parses "p", "-p" or "p/q" (q > 0 after normalization). Throws
/// Error(InvalidArgument) on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Comma-separated list of rationals, e.g. "1/3,1/3,1/3".
RatVector parse_rational_list(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

inline Integer numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denom(const Rational& r) { return boost::multiprecision::denominator(r); }

Integer floor_div(const Rational& r);
Integer ceil_div(const Rational& r);

double to_double(const Rational& r);

RatVector to_rational(const IntVector& v);

Rational dot(const RatVector& a, const RatVector& b);
Rational dot(const RatVector& a, const IntVector& b);
Integer dot(const IntVector& a, const IntVector& b);

}  // namespace toric
