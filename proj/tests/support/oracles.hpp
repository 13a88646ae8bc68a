#pragma once

// Brute-force references used by the unit and acceptance suites. Nothing here
// calls the routine it is meant to check.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "charvar/arrangement.hpp"
#include "charvar/presentation.hpp"
#include "charvar/smith.hpp"

namespace oracle {

using charvar::Integer;
using charvar::Rational;

/// Multiplicity of every intersection point, found by grouping all pairs.
std::map<std::size_t, std::size_t> pair_count_multiplicities(const charvar::Arrangement& arr);

/// Rank over Q of a rational matrix by plain Gaussian elimination.
std::size_t gauss_rank(std::vector<std::vector<Rational>> m);

/// h1 at a +-1 character: Fox derivatives are evaluated letter by letter at
/// the signs, then the rank is taken over Q.
std::size_t sign_h1(const charvar::GroupPresentation& pres, const std::vector<int>& signs);

/// |Hom(Z^n / rows, Z/k)| counted by enumerating (Z/k)^n.
std::uint64_t hom_count(const std::vector<std::vector<std::int64_t>>& rows, std::size_t n, std::int64_t k);

/// The same count predicted from a list of invariant factors (0 = free).
std::uint64_t hom_count_from_factors(const std::vector<Integer>& factors, std::int64_t k);

/// Number of elements of each order in {k in sum Z/m_i : sum k_i/m_i in Z}.
std::map<std::int64_t, std::size_t> beauville_order_census(const std::vector<std::int64_t>& m);

/// Number of elements of each order in a finite abelian group.
std::map<std::int64_t, std::size_t> group_order_census(const charvar::AbelianGroup& g);

/// h1 of a rank-one local system on a genus g surface with p >= 0 points
/// removed, via the one-relator presentation and the arrangement-side oracle.
/// values: a_1, b_1, ..., a_g, b_g, then one per removed point.
std::size_t surface_h1(int genus, const std::vector<Rational>& values);

}  // namespace oracle
