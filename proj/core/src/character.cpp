#include "charvar/character.hpp"

#include <limits>

#include "charvar/errors.hpp"

namespace charvar {
namespace {

__extension__ using Wide = __int128;

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  const Wide p = static_cast<Wide>(a) * b % m;
  return static_cast<std::int64_t>(p < 0 ? p + m : p);
}

}  // namespace

RationalCharacter::RationalCharacter(std::vector<std::int64_t> residues, std::int64_t modulus)
    : residues_(std::move(residues)), order_(modulus) {
  if (modulus <= 0) throw InvalidInput("character modulus must be positive");
  normalize();
}

void RationalCharacter::normalize() {
  std::int64_t g = order_;
  for (auto& r : residues_) {
    r = floor_mod(r, order_);
    g = gcd64(g, r);
  }
  if (g > 1) {
    for (auto& r : residues_) r /= g;
    order_ /= g;
  }
}

RationalCharacter RationalCharacter::trivial(std::size_t n) {
  return RationalCharacter(std::vector<std::int64_t>(n, 0), 1);
}

RationalCharacter RationalCharacter::from_exponents(std::span<const Rational> exponents) {
  std::int64_t modulus = 1;
  for (const auto& e : exponents) modulus = lcm64(modulus, to_int64(denominator_of(e)));
  std::vector<std::int64_t> residues;
  residues.reserve(exponents.size());
  for (const auto& e : exponents) {
    const Integer scaled = numerator_of(e) * (modulus / to_int64(denominator_of(e)));
    residues.push_back(to_int64(floor_mod(scaled, Integer(modulus))));
  }
  return RationalCharacter(std::move(residues), modulus);
}

RationalCharacter RationalCharacter::parse(std::span<const std::string> exponents) {
  std::vector<Rational> values;
  values.reserve(exponents.size());
  for (const auto& s : exponents) values.push_back(parse_rational(s));
  return from_exponents(values);
}

RationalCharacter RationalCharacter::from_signs(std::span<const int> signs) {
  std::vector<std::int64_t> residues;
  residues.reserve(signs.size());
  for (int s : signs) {
    if (s != 1 && s != -1) throw InvalidInput("sign vector entries must be +1 or -1");
    residues.push_back(s == 1 ? 0 : 1);
  }
  return RationalCharacter(std::move(residues), 2);
}

std::int64_t RationalCharacter::residue_mod(std::size_t i, std::int64_t n) const {
  if (n % order_ != 0) throw InvalidInput("modulus is not a multiple of the character order");
  return residues_.at(i) * (n / order_);
}

Rational RationalCharacter::exponent(std::size_t i) const {
  return Rational(Integer(residues_.at(i)), Integer(order_));
}

Rational RationalCharacter::exponent_sum() const {
  std::int64_t s = 0;
  for (auto r : residues_) s = (s + r) % order_;
  return Rational(Integer(s), Integer(order_));
}

RationalCharacter RationalCharacter::operator+(const RationalCharacter& other) const {
  if (other.size() != size()) throw InvalidInput("character length mismatch");
  const std::int64_t l = lcm64(order_, other.order_);
  std::vector<std::int64_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    out[i] = (mul_mod(residues_[i], l / order_, l) + mul_mod(other.residues_[i], l / other.order_, l)) % l;
  }
  return RationalCharacter(std::move(out), l);
}

RationalCharacter RationalCharacter::operator-() const {
  std::vector<std::int64_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = floor_mod(-residues_[i], order_);
  return RationalCharacter(std::move(out), order_);
}

RationalCharacter RationalCharacter::operator-(const RationalCharacter& other) const {
  return *this + (-other);
}

RationalCharacter RationalCharacter::scaled(std::int64_t k) const {
  std::vector<std::int64_t> out(size());
  const std::int64_t kk = floor_mod(k, order_);
  for (std::size_t i = 0; i < size(); ++i) out[i] = mul_mod(residues_[i], kk, order_);
  return RationalCharacter(std::move(out), order_);
}

RationalCharacter RationalCharacter::galois_conjugate(std::int64_t unit) const {
  if (gcd64(floor_mod(unit, order_), order_) != 1 && order_ > 1) {
    throw InvalidInput("Galois exponent must be a unit modulo the order");
  }
  return scaled(unit);
}

std::vector<std::string> RationalCharacter::to_strings() const {
  std::vector<std::string> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(charvar::to_string(exponent(i)));
  return out;
}

std::string RationalCharacter::to_string() const {
  std::string out = "(";
  const auto parts = to_strings();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  return out + ")";
}

std::strong_ordering operator<=>(const RationalCharacter& a, const RationalCharacter& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  // Compare exponents as rationals, coordinate by coordinate.
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Wide lhs = static_cast<Wide>(a.residues_[i]) * b.order_;
    const Wide rhs = static_cast<Wide>(b.residues_[i]) * a.order_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

CharacterEnumerator::CharacterEnumerator(std::size_t n, std::int64_t modulus)
    : n_(n), modulus_(modulus), count_(1) {
  if (modulus <= 0) throw InvalidInput("modulus must be positive");
  for (std::size_t i = 0; i < n; ++i) {
    if (count_ > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(modulus)) {
      throw BudgetExceeded("character enumeration overflows 64 bits");
    }
    count_ *= static_cast<std::uint64_t>(modulus);
  }
}

RationalCharacter CharacterEnumerator::at(std::uint64_t index) const {
  std::vector<std::int64_t> residues(n_);
  for (std::size_t i = n_; i-- > 0;) {
    residues[i] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(modulus_));
    index /= static_cast<std::uint64_t>(modulus_);
  }
  return RationalCharacter(std::move(residues), modulus_);
}

}  // namespace charvar
