#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace charvar {

// Expression templates are disabled so that `auto` always yields a value.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses "p", "-p" or "p/q" exactly. Rejects decimals, exponents and q = 0.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);
/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

Integer numerator_of(const Rational& value);
Integer denominator_of(const Rational& value);

/// Representative of value mod 1 in [0, 1).
Rational fractional_part(const Rational& value);

/// Floor-mod with a nonnegative result; modulus must be positive.
Integer floor_mod(const Integer& value, const Integer& modulus);
std::int64_t floor_mod(std::int64_t value, std::int64_t modulus);

Integer gcd(const Integer& a, const Integer& b);
std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

/// Throws InvalidInput if the value does not fit.
std::int64_t to_int64(const Integer& value);

}  // namespace charvar
