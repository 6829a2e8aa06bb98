#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace smc {

// All weights and curve lengths are exact rationals.  Floating point never
// enters the core: approximation-ratio comparisons in the tests are exact.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses a decimal string ("12", "-3.25", "0.125") into an exact rational.
// This is the only accepted exchange format for weights; binary floating
// point is rejected at the JSON layer so that values round-trip exactly.
// Throws std::invalid_argument on malformed input.
Rational parse_decimal(const std::string& text);

// Formats a rational exactly: as a plain decimal when the denominator is of
// the form 2^a * 5^b (so the expansion terminates), otherwise as "p/q".
// parse_decimal(format_rational(q)) == q whenever the decimal form is used.
std::string format_rational(const Rational& q);

}  // namespace smc
