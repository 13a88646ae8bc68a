#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "charvar/character.hpp"
#include "charvar/matrix.hpp"

namespace charvar {

enum class Provenance { local, pencil, translated };

std::string_view to_string(Provenance p);

/// An element of the Pontrjagin dual of a finite abelian group
/// Z/m_1 + ... + Z/m_k, stored as residues v_i mod m_i.
struct DualCharacter {
  std::vector<Integer> moduli;
  std::vector<Integer> residues;

  bool is_trivial() const;
  std::string to_string() const;
  bool operator==(const DualCharacter&) const = default;
};

/// A torsion-translated subtorus W = translation * exp(span_R(lattice rows))
/// inside the character torus of the projective complement. The lattice is
/// kept saturated, so its rank is the dimension of W.
class ComponentDescriptor {
 public:
  ComponentDescriptor(const IntMatrix& directions, const RationalCharacter& translation,
                      Provenance provenance, std::string label);

  const IntMatrix& lattice() const noexcept { return lattice_; }
  const RationalCharacter& translation() const noexcept { return translation_; }
  std::size_t dimension() const noexcept { return lattice_.rows(); }
  std::size_t ambient_dimension() const noexcept { return translation_.size(); }
  Provenance provenance() const noexcept { return provenance_; }
  const std::string& label() const noexcept { return label_; }

  const std::optional<DualCharacter>& induced() const noexcept { return induced_; }
  void set_induced(DualCharacter rho_tilde) { induced_ = std::move(rho_tilde); }

  bool contains(const RationalCharacter& rho) const;
  bool contains_trivial() const;
  /// W is contained in other (same ambient torus).
  bool contained_in(const ComponentDescriptor& other) const;

  /// translation + sum_k params[k] * lattice row k.
  RationalCharacter point(const RationalCharacter& params) const;
  /// Every point of W whose order divides n, sorted.
  std::vector<RationalCharacter> points_of_order(std::int64_t n) const;

 private:
  // Coordinates in which W is {w : w_k = fixed_k for k >= dimension}.
  std::vector<Rational> coordinates(const RationalCharacter& rho) const;

  IntMatrix lattice_;
  IntMatrix completion_;          // unimodular; first rows span the lattice
  IntMatrix coordinate_change_;   // inverse transpose of completion_
  RationalCharacter translation_;
  Provenance provenance_;
  std::string label_;
  std::optional<DualCharacter> induced_;
};

}  // namespace charvar
