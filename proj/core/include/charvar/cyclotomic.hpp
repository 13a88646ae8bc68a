#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "charvar/matrix.hpp"
#include "charvar/numeric.hpp"

namespace charvar {

std::int64_t euler_phi(std::int64_t n);

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
/// Cached; safe to call concurrently.
const std::vector<Integer>& cyclotomic_polynomial(std::int64_t n);

/// Element of Q(zeta_N) as a polynomial in zeta of degree < phi(N).
class CyclotomicNumber {
 public:
  CyclotomicNumber() = default;
  CyclotomicNumber(std::int64_t conductor, const Rational& value);
  /// Reduces an arbitrary coefficient vector modulo Phi_N.
  CyclotomicNumber(std::int64_t conductor, std::vector<Rational> coefficients);

  static CyclotomicNumber zeta_power(std::int64_t conductor, std::int64_t k);
  /// sum_k coefficients[k] * zeta^k for k in [0, N).
  static CyclotomicNumber from_power_sums(std::int64_t conductor, std::span<const std::int64_t> coefficients);

  std::int64_t conductor() const noexcept { return conductor_; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const;

  CyclotomicNumber operator+(const CyclotomicNumber& o) const;
  CyclotomicNumber operator-(const CyclotomicNumber& o) const;
  CyclotomicNumber operator-() const;
  CyclotomicNumber operator*(const CyclotomicNumber& o) const;
  /// Throws InvalidInput on zero.
  CyclotomicNumber inverse() const;
  CyclotomicNumber operator/(const CyclotomicNumber& o) const { return *this * o.inverse(); }
  bool operator==(const CyclotomicNumber& o) const;

  std::string to_string() const;

 private:
  void reduce();

  std::int64_t conductor_ = 1;
  std::vector<Rational> coeffs_;  // size phi(N)
};

using CyclotomicMatrix = Matrix<CyclotomicNumber>;

/// Rank over Q(zeta_N) by fraction-free (Bareiss) elimination.
std::size_t rank_cyclotomic(CyclotomicMatrix m);

}  // namespace charvar
