#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "charvar/arrangement.hpp"
#include "charvar/component.hpp"
#include "charvar/polynomial.hpp"
#include "charvar/smith.hpp"

namespace charvar {

struct FiberComponent {
  std::optional<std::size_t> line;  // arrangement line, when the form is one
  LinearForm form;                  // canonical
  std::int64_t multiplicity = 1;
};

struct Fiber {
  std::vector<FiberComponent> components;
  std::string location;  // assigned by validate_pencil

  std::int64_t degree() const;
  /// Every component is an arrangement line: the fiber is removed from M.
  bool all_lines() const;
  /// gcd of the multiplicities of the components that are not arrangement lines.
  std::int64_t external_gcd() const;
  HomogeneousPoly polynomial() const;
};

/// A pencil of plane curves spanned by its first two fibers, with special
/// fibers listed explicitly.
class Pencil {
 public:
  const Arrangement& arrangement() const noexcept { return arrangement_; }
  const std::vector<Fiber>& fibers() const noexcept { return fibers_; }
  std::int64_t degree() const noexcept { return degree_; }
  const std::string& label() const noexcept { return label_; }
  std::optional<std::size_t> fiber_of_line(std::size_t line) const { return fiber_of_line_.at(line); }
  /// F_k = lambda * F_0 + mu * F_1 for the listed fiber polynomials.
  const std::pair<Rational, Rational>& combination(std::size_t k) const { return combination_.at(k); }
  /// Reduced pencil whose fibers are single arrangement lines.
  bool is_local() const;
  /// Blocks of arrangement lines for all-line reduced fibers, in fiber order.
  std::vector<std::vector<std::size_t>> blocks() const;

 private:
  friend Pencil validate_pencil(const Arrangement&, std::vector<Fiber>, std::string);

  Arrangement arrangement_;
  std::vector<Fiber> fibers_;
  std::int64_t degree_ = 0;
  std::string label_;
  std::vector<std::optional<std::size_t>> fiber_of_line_;
  std::vector<std::pair<Rational, Rational>> combination_;
};

/// Checks equal degrees, the rank-2 condition, that each line lies in at most
/// one fiber and that no unlisted line lies in a member, and that base points
/// lie on the arrangement. Assigns locations 0, inf, then f = F_0/F_1 values.
Pencil validate_pencil(const Arrangement& arr, std::vector<Fiber> fibers, std::string label = "");

/// Pencil file: {"fibers": [[{"line": 1, "multiplicity": 1}, {"form": ["1","1","-1"], "multiplicity": 2}], ...]}
Pencil parse_pencil(std::string_view document, const Arrangement& arr);

/// "(15|26|38)"; comma separated when some label exceeds 9.
std::string partition_label(const std::vector<std::vector<std::size_t>>& blocks);

struct OrbifoldPoint {
  std::string location;
  std::int64_t multiplicity = 2;
};

/// Base curve of genus g with punctures and orbifold points. Its orbifold
/// abelianization has generators a_1, b_1, ..., a_g, b_g, then one loop per
/// puncture, then one per orbifold point; relations sum(p) + sum(q) = 0 and m_j q_j = 0.
struct OrbifoldBase {
  int genus = 0;
  std::vector<std::string> punctures;
  std::vector<OrbifoldPoint> orbifold_points;

  bool compact() const noexcept { return punctures.empty(); }
  std::int64_t euler_characteristic() const;
  std::size_t b1() const;
  std::size_t n_generators() const;
  std::size_t puncture_generator(std::size_t i) const { return 2 * static_cast<std::size_t>(genus) + i; }
  std::size_t orbifold_generator(std::size_t j) const {
    return 2 * static_cast<std::size_t>(genus) + punctures.size() + j;
  }
  IntMatrix relations() const;
};

OrbifoldBase orbifold_base(const Pencil& p);

/// T(f) as the torsion of the orbifold abelianization, with the Smith data
/// needed to move between generators and invariant-factor coordinates.
struct TranslationGroup {
  AbelianGroup h1_orb;
  AbelianGroup group;
  SmithForm snf;                              // of relations transposed
  std::vector<std::size_t> torsion_coordinates;
  std::vector<std::size_t> free_coordinates;
  std::vector<Integer> moduli;                // invariant factor per torsion coordinate
  std::vector<std::vector<Integer>> generators;

  std::uint64_t order() const;
  /// Every element of the dual group, lexicographic in residues.
  std::vector<DualCharacter> dual_elements() const;
  /// Values mod 1 on the base generators of the character that restricts to
  /// rho_tilde on torsion and vanishes on the free coordinates.
  std::vector<Rational> values(const DualCharacter& rho_tilde) const;
};

TranslationGroup translation_group(const OrbifoldBase& base);

/// {(k_1..k_s) in sum Z/m_i : sum k_i/m_i in Z}, by enumeration.
AbelianGroup beauville_dual(std::span<const std::int64_t> multiplicities);

/// Indices of orbifold points c with rho_tilde nontrivial on q_c.
std::vector<std::size_t> singular_support(const OrbifoldBase& base, const TranslationGroup& t,
                                          const DualCharacter& rho_tilde);

/// Dual elements that give components: all of them when chi(S) < 0, the
/// nontrivial ones when chi(S) = 0, none when chi(S) > 0.
std::vector<DualCharacter> component_characters(const OrbifoldBase& base, const TranslationGroup& t);

struct Corollary1Verdict {
  bool holds = false;
  std::string case_label;  // "(i)", "(ii)", "chi<0", "chi>0"
  bool translated_present = false;
  bool untranslated_present = false;
};

Corollary1Verdict corollary1_check(const OrbifoldBase& base, const std::vector<DualCharacter>& emitted);

/// Meridian i maps to m_i times the loop of its fiber: a puncture loop for
/// removed fibers, the orbifold loop for multiple fibers, 0 otherwise.
IntMatrix pushforward_map(const Pencil& p, const OrbifoldBase& base);

class PencilAnalysis {
 public:
  explicit PencilAnalysis(Pencil pencil);

  const Pencil& pencil() const noexcept { return pencil_; }
  const OrbifoldBase& base() const noexcept { return base_; }
  const TranslationGroup& translation() const noexcept { return translation_; }
  const IntMatrix& pushforward() const noexcept { return pushforward_; }

  /// Values of a base character in invariant-factor coordinates whose
  /// pullback is rho, if rho is a pullback.
  std::optional<std::vector<Rational>> lift(const RationalCharacter& rho) const;
  bool is_pullback(const RationalCharacter& rho) const { return lift(rho).has_value(); }
  /// Throws InvalidInput when rho is not a pullback.
  DualCharacter induced_character(const RationalCharacter& rho) const;

  ComponentDescriptor component(const DualCharacter& rho_tilde) const;
  std::vector<ComponentDescriptor> translated_components() const;

  std::vector<std::size_t> singular_support(const RationalCharacter& rho) const;
  std::vector<std::string> singular_locations(const RationalCharacter& rho) const;
  /// q(f, rho) = -chi(S) + |Sigma|.
  std::int64_t generic_h1(const RationalCharacter& rho) const;

 private:
  Pencil pencil_;
  OrbifoldBase base_;
  TranslationGroup translation_;
  IntMatrix pushforward_;
  IntMatrix image_;                               // U * pushforward, rows are coordinates
  std::vector<std::vector<Integer>> sections_;    // image_ * x = e_k modulo the invariant factors
};

}  // namespace charvar
