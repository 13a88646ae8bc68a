#include <gtest/gtest.h>

#include "charvar/arrangement.hpp"
#include "charvar/errors.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace charvar;

TEST(ParseArrangement, Suciu) {
  const Arrangement arr = fixture::suciu();
  EXPECT_EQ(arr.size(), 8u);
  EXPECT_EQ(arr.infinity_index(), 7u);
  EXPECT_EQ(arr.affine_lines().size(), 7u);
  EXPECT_EQ(to_string(arr.line(1).coefficients), "[1,0,-1]");
}

TEST(ParseArrangement, AcceptsRationalStrings) {
  const Arrangement arr = parse_arrangement(R"({"lines": [["2","0","0"], ["0","1/2","0"], ["0","0","-3"]], "infinity": 3})");
  EXPECT_EQ(arr.size(), 3u);
  EXPECT_EQ(to_string(arr.line(0).coefficients), "[1,0,0]");
  EXPECT_EQ(to_string(arr.line(2).coefficients), "[0,0,1]");
}

TEST(ParseArrangement, Errors) {
  EXPECT_THROW(parse_arrangement(R"({"lines": [[1,0,0],[2,0,0],[0,0,1]], "infinity": 3})"), InvalidInput);
  EXPECT_THROW(parse_arrangement(R"({"lines": [[0,0,0],[0,1,0]], "infinity": 2})"), InvalidInput);
  EXPECT_THROW(parse_arrangement(R"({"lines": [[1,0,0],[0,1,0]], "infinity": 3})"), InvalidInput);
  EXPECT_THROW(parse_arrangement(R"({"lines": [[1,0],[0,1,0]], "infinity": 2})"), ParseError);
  EXPECT_THROW(parse_arrangement(R"({"lines": [["x",0,0]], "infinity": 1})"), ParseError);
  EXPECT_THROW(parse_arrangement("{"), ParseError);
  EXPECT_THROW(parse_arrangement(R"({"lines": []})"), ParseError);
}

TEST(Lattice, SuciuCensus) {
  const IntersectionLattice lat = build_lattice(fixture::suciu());
  EXPECT_EQ(lat.count_with_multiplicity(3), 6u);
  EXPECT_EQ(lat.count_with_multiplicity(4), 1u);
  EXPECT_EQ(lat.count_with_multiplicity(2), 4u);
  EXPECT_TRUE(lat.pair_count_holds());
  const auto brute = oracle::pair_count_multiplicities(fixture::suciu());
  EXPECT_EQ(brute, (std::map<std::size_t, std::size_t>{{2, 4}, {3, 6}, {4, 1}}));
}

TEST(Lattice, SmallArrangements) {
  const auto generic = build_lattice(parse_arrangement(fixture::read(fixture::data("generic3.json"))));
  EXPECT_EQ(generic.count_with_multiplicity(2), 3u);
  EXPECT_EQ(generic.points.size(), 3u);
  const auto concurrent = build_lattice(parse_arrangement(R"({"lines": [[1,0,0],[0,1,0],[1,1,0]], "infinity": 3})"));
  EXPECT_EQ(concurrent.points.size(), 1u);
  EXPECT_EQ(concurrent.count_with_multiplicity(3), 1u);
  EXPECT_EQ(concurrent.count_with_multiplicity(2), 0u);
}

TEST(Lattice, PairCountAgreesWithBruteForce) {
  for (const char* name : {"braid_a3.json", "concurrent3.json", "generic3.json", "two_lines.json"}) {
    const Arrangement arr = parse_arrangement(fixture::read(fixture::data(name)));
    const IntersectionLattice lat = build_lattice(arr);
    EXPECT_TRUE(lat.pair_count_holds()) << name;
    std::map<std::size_t, std::size_t> counts;
    for (const auto& p : lat.points) ++counts[p.multiplicity()];
    EXPECT_EQ(counts, oracle::pair_count_multiplicities(arr)) << name;
  }
}

TEST(LocalComponents, Suciu) {
  const auto comps = local_components(build_lattice(fixture::suciu()));
  ASSERT_EQ(comps.size(), 7u);
  std::size_t dim2 = 0, dim3 = 0;
  for (const auto& w : comps) {
    EXPECT_TRUE(w.contains_trivial());
    EXPECT_EQ(w.provenance(), Provenance::local);
    dim2 += w.dimension() == 2;
    dim3 += w.dimension() == 3;
  }
  EXPECT_EQ(dim2, 6u);
  EXPECT_EQ(dim3, 1u);
}

TEST(LocalComponents, TriplePointLattice) {
  const Arrangement arr = parse_arrangement(R"({"lines": [[1,0,0],[0,1,0],[1,-1,0],[0,0,1]], "infinity": 4})");
  const auto comps = local_components(build_lattice(arr));
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].dimension(), 2u);
  EXPECT_TRUE(comps[0].contains(RationalCharacter({1, 1, 1, 0}, 3)));
  EXPECT_TRUE(comps[0].contains(RationalCharacter({1, 2, 0, 0}, 3)));
  EXPECT_FALSE(comps[0].contains(RationalCharacter({1, 1, 0, 1}, 3)));
  EXPECT_TRUE(local_components(build_lattice(parse_arrangement(fixture::read(fixture::data("generic3.json"))))).empty());
}

TEST(Decone, RhoW) {
  const Arrangement arr = fixture::suciu();
  const auto rho = RationalCharacter::from_signs(fixture::kRhoW);
  const auto affine = decone_character(arr, rho);
  EXPECT_EQ(affine, RationalCharacter({0, 1, 1, 0, 0, 1, 0}, 2));
  EXPECT_EQ(cone_character(arr, affine), rho);
  EXPECT_TRUE(decone_character(arr, RationalCharacter::trivial(8)).is_trivial());
  EXPECT_THROW(decone_character(arr, RationalCharacter({1, 0, 0, 0, 0, 0, 0, 0}, 2)), ConstraintViolation);
}

TEST(Decone, RoundTrip) {
  const Arrangement arr = fixture::suciu();
  CharacterEnumerator e(7, 3);
  for (std::uint64_t i = 0; i < e.count(); i += 7) {
    const auto a = e.at(i);
    const auto p = cone_character(arr, a);
    EXPECT_EQ(denominator(p.exponent_sum()), 1);
    EXPECT_EQ(decone_character(arr, p), a);
  }
}
