#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace aoiadv {

/// Exact rational used for every engine output.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Parses "p/q", an integer, or a plain decimal such as "0.25" exactly.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// base^exponent for a non-negative exponent.
Rational pow(const Rational& base, unsigned exponent);

/// floor(value) for non-negative values, as a plain integer.
long long floor_to_int(const Rational& value);

}  // namespace aoiadv
