#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "charvar/arrangement.hpp"
#include "charvar/matrix.hpp"
#include "charvar/numeric.hpp"
#include "charvar/smith.hpp"

namespace charvar {

/// Letters are signed 1-based generator indices: +k is x_k, -k is x_k^-1.
using FreeWord = std::vector<int>;

FreeWord free_reduce(const FreeWord& w);
FreeWord inverse(const FreeWord& w);
bool is_reduced(const FreeWord& w);
std::string to_string(const FreeWord& w);

struct WiringVertex {
  Rational x;                          // sheared abscissa
  Rational y;
  std::size_t position = 0;            // lowest strand index of the block
  std::vector<std::size_t> generators; // incident generators, bottom to top before the crossing
};

/// Real picture of the affine arrangement after the shear x -> x + q*y:
/// strands ordered bottom to top left of every vertex, then the vertices
/// from left to right.
struct WiringDiagram {
  Rational shear;
  std::size_t n_generators = 0;
  std::vector<std::size_t> initial_order;
  std::vector<WiringVertex> vertices;
};

/// Throws DegenerateProjection if a line becomes vertical or two vertices
/// share an abscissa.
WiringDiagram wiring_diagram(const Arrangement& arr, const Rational& shear);
/// Draws small rational shears from a seeded generator until one is generic.
WiringDiagram wiring_diagram(const Arrangement& arr, std::uint64_t seed, int attempts = 64);

struct GroupPresentation {
  std::size_t n_generators = 0;
  std::vector<FreeWord> relators;
};

GroupPresentation randell_presentation(const WiringDiagram& wd);

/// Relator exponent sums, one row per relator.
IntMatrix exponent_matrix(const GroupPresentation& pres);
AbelianGroup abelianization(const GroupPresentation& pres);

}  // namespace charvar
