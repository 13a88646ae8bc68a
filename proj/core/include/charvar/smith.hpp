#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "charvar/matrix.hpp"

namespace charvar {

/// Smith normal form with certificates: left * A * right == diagonal,
/// where left and right are unimodular and the diagonal entries
/// d_1 | d_2 | ... are nonnegative. Zero entries come last.
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
  std::vector<Integer> invariant_factors;  // min(rows, cols) entries
  std::size_t rank = 0;

  /// Checks the product identity, the divisibility chain and det(left), det(right) = ±1.
  bool verify(const IntMatrix& a) const;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Inverse of a unimodular matrix; throws InvalidInput otherwise.
IntMatrix unimodular_inverse(const IntMatrix& a);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& a);

/// Finitely generated abelian group Z^free_rank + sum Z/torsion[i].
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, divisibility chain

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_free() const { return torsion.empty(); }
  Integer torsion_order() const;
  /// e.g. "Z^2 + Z/2 + Z/6", "0" for the trivial group.
  std::string to_string() const;
  bool operator==(const AbelianGroup&) const = default;
};

/// Z^n modulo the row space of `relations` (each row is one relation).
AbelianGroup cokernel(const IntMatrix& relations, std::size_t n_generators);

/// Invariant factors of a finite abelian group given the number of elements of
/// each order (elements_of_order[k] = #{g : ord(g) = k}).
AbelianGroup finite_group_from_order_census(const std::vector<std::size_t>& elements_of_order);

/// Z-basis of {x in Z^cols : A x = 0}.
std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& a);

/// Some x in Z^cols with A x = b, if one exists.
std::optional<std::vector<Integer>> solve_integer(const IntMatrix& a, std::span<const Integer> b);

}  // namespace charvar
