#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charvar/arrangement.hpp"
#include "charvar/component.hpp"
#include "charvar/partition_search.hpp"
#include "charvar/pencil.hpp"
#include "charvar/presentation.hpp"
#include "charvar/twisted.hpp"

namespace charvar {

struct CensusOptions {
  std::int64_t order = 2;  // full scan order and jump-set order
  PartitionSearchOptions search;
  bool verify_thm4 = false;
  std::vector<std::int64_t> thm4_orders{2, 3, 4};
  std::vector<std::int64_t> certification_orders{3, 4, 5};
  std::uint64_t seed = 1;
  ScanOptions scan;  // caps; scan.order is taken from order
};

struct Sample {
  RationalCharacter rho;  // projective
  std::size_t h1 = 0;
};

struct CensusComponent {
  ComponentDescriptor descriptor;
  std::string source;  // "local", "partition", "user"
  std::optional<std::size_t> pencil;  // index into CensusResult::pencils
  std::int64_t generic_h1 = 0;        // q(f, rho)
  std::vector<std::string> sigma;     // singular support locations
  std::vector<Sample> samples;
  std::vector<Sample> jumps;          // order-N points with h1 > q
  std::optional<std::vector<Sample>> exceptional;  // --verify-thm4: points with h1 != q
  std::uint64_t thm4_points = 0;
};

struct CensusPencil {
  std::string source;  // "partition", "user"
  std::optional<PencilAnalysis> analysis;
  bool certified = false;
  std::string note;
  std::optional<Corollary1Verdict> corollary1;
};

struct OrderScan {
  std::int64_t order = 0;
  std::uint64_t characters = 0;
  std::vector<std::pair<std::size_t, std::uint64_t>> histogram;  // h1 -> count
  std::uint64_t in_components = 0;
  std::vector<Sample> isolated;  // h1 >= 1 but in no component
};

struct Disagreement {
  std::string what;
  std::optional<RationalCharacter> character;
};

struct CensusResult {
  Arrangement arrangement;
  IntersectionLattice lattice;
  Rational shear;
  std::size_t relator_count = 0;
  std::vector<CensusComponent> components;
  std::vector<CensusPencil> pencils;
  OrderScan scan;
  std::vector<Disagreement> disagreements;
  std::int64_t order = 2;
  std::uint64_t seed = 1;
};

/// Local components, certified partition pencils and user pencils, each
/// checked against the cohomology oracle.
CensusResult run_census(const Arrangement& arr, const std::vector<Pencil>& user_pencils,
                        const CensusOptions& options = {});

/// Oracle built from the deconed arrangement with a seeded shear.
CohomologyOracle arrangement_oracle(const Arrangement& arr, std::uint64_t seed, Rational* shear = nullptr);

/// h1 of projective characters, deconed first.
std::vector<std::size_t> projective_h1(const Arrangement& arr, const CohomologyOracle& oracle,
                                       const std::vector<RationalCharacter>& characters, std::size_t threads = 0);

/// Points translation + (1/t)(1, 2, ..., d) for each sample order t.
std::vector<RationalCharacter> certification_points(const ComponentDescriptor& w,
                                                    const std::vector<std::int64_t>& orders);

}  // namespace charvar
