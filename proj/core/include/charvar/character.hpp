#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "charvar/numeric.hpp"

namespace charvar {

/// A torsion character written additively: the value on the i-th generator is
/// exp(2*pi*i * residue(i) / order()). Residues live in [0, order) and the
/// order is the least common denominator of the exponents.
class RationalCharacter {
 public:
  RationalCharacter() = default;
  RationalCharacter(std::vector<std::int64_t> residues, std::int64_t modulus);

  static RationalCharacter trivial(std::size_t n);
  static RationalCharacter from_exponents(std::span<const Rational> exponents);
  /// Parses "p/q" strings (integers allowed).
  static RationalCharacter parse(std::span<const std::string> exponents);
  /// +1 -> exponent 0, -1 -> exponent 1/2.
  static RationalCharacter from_signs(std::span<const int> signs);

  std::size_t size() const noexcept { return residues_.size(); }
  std::int64_t order() const noexcept { return order_; }
  std::int64_t residue(std::size_t i) const { return residues_[i]; }
  const std::vector<std::int64_t>& residues() const noexcept { return residues_; }
  /// Exponent i scaled to modulus n; order() must divide n.
  std::int64_t residue_mod(std::size_t i, std::int64_t n) const;
  Rational exponent(std::size_t i) const;
  bool is_trivial() const noexcept { return order_ == 1; }

  /// Sum of exponents reduced to [0, 1).
  Rational exponent_sum() const;

  RationalCharacter operator+(const RationalCharacter& other) const;
  RationalCharacter operator-(const RationalCharacter& other) const;
  RationalCharacter operator-() const;
  RationalCharacter scaled(std::int64_t k) const;
  /// Applies zeta -> zeta^unit; gcd(unit, order) must be 1.
  RationalCharacter galois_conjugate(std::int64_t unit) const;

  std::vector<std::string> to_strings() const;
  std::string to_string() const;

  friend bool operator==(const RationalCharacter&, const RationalCharacter&) = default;
  friend std::strong_ordering operator<=>(const RationalCharacter& a, const RationalCharacter& b);

 private:
  void normalize();

  std::vector<std::int64_t> residues_;
  std::int64_t order_ = 1;
};

/// All characters on n generators whose order divides `modulus`, in
/// lexicographic order of residues.
class CharacterEnumerator {
 public:
  CharacterEnumerator(std::size_t n, std::int64_t modulus);
  std::uint64_t count() const noexcept { return count_; }
  RationalCharacter at(std::uint64_t index) const;

 private:
  std::size_t n_;
  std::int64_t modulus_;
  std::uint64_t count_;
};

}  // namespace charvar
