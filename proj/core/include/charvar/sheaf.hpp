#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charvar/character.hpp"
#include "charvar/pencil.hpp"

namespace charvar {

/// Smooth curve of genus g with k punctures and marked points (candidate
/// singular support). Loops: a_1, b_1, ..., a_g, b_g, delta_1..delta_k, sigma_1..sigma_m.
struct BaseCurve {
  int genus = 0;
  int punctures = 0;
  std::vector<std::string> marked;

  bool compact() const noexcept { return punctures == 0; }
  std::int64_t euler_characteristic() const { return 2 - 2 * genus - punctures; }
  std::size_t b1() const;
  std::size_t n_loops() const { return static_cast<std::size_t>(2 * genus + punctures) + marked.size(); }
  std::size_t delta_index(std::size_t j) const { return static_cast<std::size_t>(2 * genus) + j; }
  std::size_t sigma_index(std::size_t c) const { return static_cast<std::size_t>(2 * genus + punctures) + c; }
};

/// sum(delta) + sum(sigma) = 0 in Q/Z.
bool relation_holds(const BaseCurve& base, const RationalCharacter& values);

/// Rank-one model of R^0 f_* L_rho: a local system on S minus Sigma,
/// extended by j_*. Sigma is where the local monodromy is nontrivial.
struct SheafModel {
  BaseCurve base;
  RationalCharacter monodromy;
  std::vector<std::size_t> singular_support;  // marked-point indices
};

/// Throws InvalidInput when the loop relation fails.
SheafModel make_model(BaseCurve base, RationalCharacter monodromy);

/// nullopt (the zero sheaf) when rho is not a pullback along the pencil.
std::optional<SheafModel> model_pushforward(const PencilAnalysis& pencil, const RationalCharacter& rho);

struct LocalCheck {
  std::size_t point = 0;
  std::size_t local_h0 = 0;
  std::size_t local_h1 = 0;
  std::size_t stalk = 0;
};

struct AdjunctionVerdict {
  bool holds = true;
  std::vector<LocalCheck> checks;
  std::vector<std::string> violations;
};

/// Local invariants, local H^1 and stalks of j_* at every marked point.
AdjunctionVerdict check_adjunction(const SheafModel& model);

struct CurveCohomology {
  std::size_t h0 = 0;
  std::size_t h1 = 0;
  std::size_t h2 = 0;
  std::size_t singular = 0;  // |Sigma_nu|
  std::int64_t euler() const {
    return static_cast<std::int64_t>(h0) - static_cast<std::int64_t>(h1) + static_cast<std::int64_t>(h2);
  }
};

/// H^*(S, j_*(mu (x) L)) from the topology of S minus Sigma_nu. The twist
/// must have zero values on the marked loops.
CurveCohomology twisted_cohomology(const SheafModel& model, const RationalCharacter& twist);
std::size_t h1_of_twist(const SheafModel& model, const RationalCharacter& twist);

struct Corollary2Report {
  bool holds = true;
  std::uint64_t instances = 0;      // (genus, candidate monodromy) pairs examined
  std::uint64_t contradictions = 0;  // candidates with nonzero sigma, ruled out by the relation
  std::uint64_t singletons = 0;      // valid compact models with |Sigma| = 1 (must stay 0)
};

/// Compact bases with exactly one marked point: every candidate sigma value of
/// order <= order_max either is 0 or breaks the loop relation.
Corollary2Report corollary2_scan(int g_max, std::int64_t order_max);

/// C* with one marked point of monodromy 1/2, as for the translated component.
SheafModel noncompact_singleton_witness();

struct SheafScanOptions {
  int g_max = 2;
  int k_max = 3;
  int marks_max = 3;
  std::int64_t order_max = 6;
};

struct SheafScanReport {
  std::uint64_t models = 0;
  std::uint64_t twists = 0;
  std::uint64_t adjunction_failures = 0;
  std::uint64_t euler_failures = 0;
  std::uint64_t compact_singletons = 0;
  std::uint64_t noncompact_singletons = 0;
  std::optional<SheafModel> witness;
  Corollary2Report corollary2;
  std::vector<std::string> failures;  // first few, for diagnostics

  bool holds() const {
    return adjunction_failures == 0 && euler_failures == 0 && compact_singletons == 0 && corollary2.holds;
  }
};

/// Every model with genus <= g_max, punctures <= k_max, marked points <=
/// marks_max and loop values of order <= order_max (genus loops either all
/// zero or a_1 = 1/2).
SheafScanReport sheaf_scan(const SheafScanOptions& options);

}  // namespace charvar
