#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "charvar/arrangement.hpp"
#include "charvar/numeric.hpp"

namespace charvar {

/// Homogeneous polynomial in X, Y, Z over Q.
class HomogeneousPoly {
 public:
  using Monomial = std::array<int, 3>;

  HomogeneousPoly() = default;
  static HomogeneousPoly constant(const Rational& c);
  static HomogeneousPoly linear(const LinearForm& form);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return degree_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }

  HomogeneousPoly operator+(const HomogeneousPoly& o) const;
  HomogeneousPoly operator-(const HomogeneousPoly& o) const;
  HomogeneousPoly operator*(const HomogeneousPoly& o) const;
  HomogeneousPoly scaled(const Rational& c) const;
  HomogeneousPoly power(int k) const;
  bool operator==(const HomogeneousPoly& o) const = default;

  Rational evaluate(const LinearForm& point) const;
  /// Coefficients in the fixed monomial basis of its degree (lexicographic, X first).
  std::vector<Rational> coefficient_vector(int degree) const;
  /// Vanishes on the whole line {form = 0}.
  bool vanishes_on(const LinearForm& form) const;

  std::string to_string() const;

 private:
  void add(const Monomial& m, const Rational& c);

  std::map<Monomial, Rational> terms_;
  int degree_ = -1;
};

/// Two points spanning the projective line {form = 0}.
std::array<LinearForm, 2> points_on_line(const LinearForm& form);

/// Homogeneous coordinates of the intersection of two distinct lines.
LinearForm intersection_point(const LinearForm& a, const LinearForm& b);

/// a . p == 0
bool on_line(const LinearForm& form, const LinearForm& point);

}  // namespace charvar
