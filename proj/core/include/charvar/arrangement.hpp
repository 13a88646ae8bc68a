#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "charvar/character.hpp"
#include "charvar/component.hpp"
#include "charvar/numeric.hpp"

namespace charvar {

/// Coefficients (a, b, c) of aX + bY + cZ; also used for homogeneous points.
using LinearForm = std::array<Rational, 3>;

/// Scales so the first nonzero coefficient is 1. Throws InvalidInput on (0,0,0).
LinearForm canonical_form(const LinearForm& form);

std::string to_string(const LinearForm& form);

struct RationalLine {
  LinearForm coefficients;  // canonical
  std::size_t label = 0;    // 1-based position in the arrangement file
};

/// Projective line arrangement over Q together with the deconing line.
class Arrangement {
 public:
  Arrangement() = default;
  /// infinity is a 0-based index into forms.
  Arrangement(const std::vector<LinearForm>& forms, std::size_t infinity);

  std::size_t size() const noexcept { return lines_.size(); }
  const std::vector<RationalLine>& lines() const noexcept { return lines_; }
  const RationalLine& line(std::size_t i) const { return lines_.at(i); }
  std::size_t infinity_index() const noexcept { return infinity_; }

  /// Indices of the affine lines, in arrangement order. Generator g of the
  /// affine fundamental group is the meridian of line affine_lines()[g].
  std::vector<std::size_t> affine_lines() const;
  std::optional<std::size_t> generator_of_line(std::size_t line) const;

  /// Index of the line equal (projectively) to form, if any.
  std::optional<std::size_t> find_line(const LinearForm& form) const;

 private:
  std::vector<RationalLine> lines_;
  std::size_t infinity_ = 0;
};

/// Arrangement file: {"lines": [["a","b","c"], ...], "infinity": k} with k 1-based.
Arrangement parse_arrangement(std::string_view document);

struct IntersectionPoint {
  LinearForm point;                   // canonical homogeneous coordinates
  std::vector<std::size_t> incident;  // sorted line indices
  std::size_t multiplicity() const noexcept { return incident.size(); }
};

struct IntersectionLattice {
  std::size_t n_lines = 0;
  std::vector<IntersectionPoint> points;            // sorted by incident sets
  std::vector<std::vector<std::size_t>> on_line;    // point indices per line

  std::size_t count_with_multiplicity(std::size_t m) const;
  /// sum_p C(m_p, 2) == C(n, 2)
  bool pair_count_holds() const;
};

IntersectionLattice build_lattice(const Arrangement& arr);

/// One component per point of multiplicity >= 3: characters supported on the
/// lines through the point with exponent sum 0.
std::vector<ComponentDescriptor> local_components(const IntersectionLattice& lattice);

/// Drops the infinity coordinate of a product-one projective character.
RationalCharacter decone_character(const Arrangement& arr, const RationalCharacter& projective);
/// Restores the infinity coordinate from the product-one constraint.
RationalCharacter cone_character(const Arrangement& arr, const RationalCharacter& affine);

/// Affine equation (a, b, c) of a*x + b*y + c = 0 for each affine generator,
/// in coordinates where the infinity line is the line at infinity.
std::vector<LinearForm> affine_equations(const Arrangement& arr);

}  // namespace charvar
