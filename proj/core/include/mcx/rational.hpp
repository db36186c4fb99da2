#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace mcx {

// Expression templates are disabled so that `auto` always yields a value.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

enum class Ring { integers, rationals };

std::string to_string(Ring ring);
Ring parse_ring(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Parses "p/q", "p" or a finite decimal literal such as "-0.25".
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Lossy decimal rendering with `digits` significant fractional digits.
std::string to_decimal(const Rational& value, int digits = 12);

Rational abs(const Rational& value);
Integer numerator(const Rational& value);
Integer denominator(const Rational& value);
bool is_integral(const Rational& value);

Integer factorial(unsigned n);

}  // namespace mcx
