#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "charvar/presentation.hpp"

namespace charvar {

/// Integer Laurent polynomial in t_1..t_n, stored sparsely by exponent vector.
class LaurentPoly {
 public:
  using Exponent = std::vector<int>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t n_vars) : n_vars_(n_vars) {}

  static LaurentPoly constant(std::size_t n_vars, std::int64_t c);
  static LaurentPoly monomial(Exponent e, std::int64_t c = 1);

  std::size_t n_vars() const noexcept { return n_vars_; }
  const std::map<Exponent, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Exponent& e, std::int64_t c);
  /// Value at t_1 = ... = t_n = 1.
  std::int64_t evaluate_at_one() const;

  LaurentPoly operator+(const LaurentPoly& other) const;
  LaurentPoly operator-(const LaurentPoly& other) const;
  LaurentPoly operator*(const LaurentPoly& other) const;
  bool operator==(const LaurentPoly& other) const = default;

  std::string to_string() const;

 private:
  std::size_t n_vars_ = 0;
  std::map<Exponent, std::int64_t> terms_;
};

/// Abelianized image of a word as an exponent vector.
LaurentPoly::Exponent abelian_image(const FreeWord& w, std::size_t n_generators);

/// Abelianized Fox derivative d w / d x_i (i is 0-based).
LaurentPoly fox_derivative(const FreeWord& w, std::size_t i, std::size_t n_generators);

struct AlexanderMatrix {
  std::size_t n_generators = 0;
  std::vector<std::vector<LaurentPoly>> entries;  // one row per relator

  std::size_t rows() const noexcept { return entries.size(); }
};

AlexanderMatrix alexander_matrix(const GroupPresentation& pres);

}  // namespace charvar
