#pragma once

#include <cstdint>
#include <vector>

#include "charvar/character.hpp"
#include "charvar/cyclotomic.hpp"
#include "charvar/fox.hpp"
#include "charvar/presentation.hpp"

namespace charvar {

/// Alexander matrix with t_i -> zeta_N^(N * exponent_i). N must be a
/// multiple of rho.order().
CyclotomicMatrix evaluate_alexander(const AlexanderMatrix& a, const RationalCharacter& rho,
                                    std::int64_t conductor);

/// dim H^1(G, C_rho) = n - rank J(rho) - [rho != 1] for a finitely presented G.
class CohomologyOracle {
 public:
  explicit CohomologyOracle(GroupPresentation pres);

  std::size_t n_generators() const noexcept { return pres_.n_generators; }
  const GroupPresentation& presentation() const noexcept { return pres_; }
  const AlexanderMatrix& alexander() const noexcept { return alexander_; }

  std::size_t rank_at(const RationalCharacter& rho) const;
  std::size_t h1(const RationalCharacter& rho) const;

 private:
  struct Term {
    std::size_t row, col;
    std::vector<int> exponent;
    std::int64_t coefficient;
  };

  GroupPresentation pres_;
  AlexanderMatrix alexander_;
  std::vector<Term> terms_;
};

std::size_t twisted_h1(const GroupPresentation& pres, const RationalCharacter& rho);

/// Thread count from CHARVAR_THREADS, else the hardware concurrency.
std::size_t default_thread_count();

struct ScanOptions {
  std::int64_t order = 2;
  std::uint64_t max_characters = 300000;
  std::size_t max_generators = 16;
  std::int64_t max_order = 6;
  std::size_t threads = 0;  // 0: default_thread_count()
};

struct ScanEntry {
  RationalCharacter rho;
  std::size_t h1 = 0;
};

/// Every character with order dividing options.order, lexicographic.
/// Throws BudgetExceeded when the caps are exceeded.
std::vector<ScanEntry> torsion_scan(const CohomologyOracle& oracle, const ScanOptions& options);

/// Evaluates h1 on a list of characters in parallel; results in input order.
std::vector<std::size_t> parallel_h1(const CohomologyOracle& oracle,
                                     const std::vector<RationalCharacter>& characters,
                                     std::size_t threads = 0);

}  // namespace charvar
