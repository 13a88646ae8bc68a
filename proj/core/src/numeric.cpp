#include "charvar/numeric.hpp"

#include <limits>
#include <numeric>

#include "charvar/errors.hpp"

namespace charvar {
namespace {

bool is_digit_run(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!is_digit_run(num) || !is_digit_run(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  Integer p{std::string(num)};
  Integer q{std::string(den)};
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) p = -p;
  return Rational(p, q);
}

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const Rational& value) {
  const Integer den = denominator_of(value);
  if (den == 1) return numerator_of(value).str();
  return numerator_of(value).str() + "/" + den.str();
}

Integer numerator_of(const Rational& value) { return boost::multiprecision::numerator(value); }

Integer denominator_of(const Rational& value) {
  return boost::multiprecision::denominator(value);
}

Rational fractional_part(const Rational& value) {
  const Integer num = numerator_of(value);
  const Integer den = denominator_of(value);
  return Rational(floor_mod(num, den), den);
}

Integer floor_mod(const Integer& value, const Integer& modulus) {
  Integer r = value % modulus;
  if (r < 0) r += modulus;
  return r;
}

std::int64_t floor_mod(std::int64_t value, std::int64_t modulus) {
  std::int64_t r = value % modulus;
  return r < 0 ? r + modulus : r;
}

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  std::int64_t l = 0;
  if (__builtin_mul_overflow(a / std::gcd(a, b), b, &l) || l == std::numeric_limits<std::int64_t>::min()) {
    throw InvalidInput("character order overflow");
  }
  return l < 0 ? -l : l;
}

std::int64_t to_int64(const Integer& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw InvalidInput("integer " + value.str() + " exceeds 64 bits");
  }
  return value.convert_to<std::int64_t>();
}

}  // namespace charvar
