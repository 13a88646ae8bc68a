#pragma once

#include <cstdint>
#include <vector>

#include "charvar/arrangement.hpp"
#include "charvar/pencil.hpp"

namespace charvar {

struct PartitionSearchOptions {
  std::size_t max_subset = 12;   // lines covered by the blocks
  std::size_t max_blocks = 5;
  std::uint64_t max_pairs = 5'000'000;  // block pairs examined, over all degrees
};

/// Reduced pencils with at least three completely reducible fibers made of
/// arrangement lines, with equal block sizes. Degree-1 results are the local
/// pencils of points of multiplicity >= 3. Degree >= 2 pencils whose lines all
/// pass through one point are dropped (they lie inside a local component).
/// Candidates only: component status is decided by the cohomology oracle.
std::vector<Pencil> partition_search(const Arrangement& arr, const PartitionSearchOptions& options = {});

}  // namespace charvar
