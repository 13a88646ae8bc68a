#include <gtest/gtest.h>

#include "charvar/errors.hpp"
#include "charvar/pencil.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace charvar;

namespace {

HomogeneousPoly lin(const std::string& a, const std::string& b, const std::string& c) {
  return HomogeneousPoly::linear({parse_rational(a), parse_rational(b), parse_rational(c)});
}

OrbifoldBase synthetic(int genus, std::size_t punctures, std::vector<std::int64_t> mults) {
  OrbifoldBase b;
  b.genus = genus;
  for (std::size_t i = 0; i < punctures; ++i) b.punctures.push_back("p" + std::to_string(i));
  for (std::size_t j = 0; j < mults.size(); ++j) b.orbifold_points.push_back({"q" + std::to_string(j), mults[j]});
  return b;
}

RationalCharacter signs(const int* s) { return RationalCharacter::from_signs(std::span<const int>(s, 8)); }

}  // namespace

TEST(ValidatePencil, PartitionFifteen) {
  const Arrangement arr = fixture::suciu();
  const Pencil p = fixture::partition_pencil(arr, "15|26|38");
  EXPECT_EQ(p.label(), "(15|26|38)");
  EXPECT_EQ(p.degree(), 2);
  const HomogeneousPoly P = lin("1", "0", "0") * lin("1", "-1", "-1");
  const HomogeneousPoly Q = lin("1", "0", "-1") * lin("1", "-1", "0");
  const HomogeneousPoly yz = lin("0", "1", "0") * lin("0", "0", "1");
  EXPECT_EQ(p.fibers()[0].polynomial(), P);
  EXPECT_EQ(p.fibers()[1].polynomial(), Q);
  EXPECT_EQ(p.fibers()[2].polynomial(), yz);
  EXPECT_EQ(Q - P, yz);
  EXPECT_EQ(p.combination(2), std::make_pair(Rational(-1), Rational(1)));
  EXPECT_FALSE(p.is_local());
}

TEST(ValidatePencil, FW) {
  const Arrangement arr = fixture::suciu();
  const Pencil p = fixture::fw_pencil(arr);
  EXPECT_EQ(p.label(), "f_W");
  EXPECT_EQ(p.degree(), 4);
  ASSERT_EQ(p.fibers().size(), 3u);
  EXPECT_EQ(p.fibers()[0].location, "0");
  EXPECT_EQ(p.fibers()[1].location, "inf");
  EXPECT_EQ(p.fibers()[2].location, "1");
  EXPECT_TRUE(p.fibers()[0].all_lines());
  EXPECT_FALSE(p.fibers()[2].all_lines());
  EXPECT_EQ(p.fibers()[2].external_gcd(), 2);
  const auto [lambda, mu] = p.combination(2);
  EXPECT_EQ(p.fibers()[2].polynomial(), p.fibers()[0].polynomial().scaled(lambda) + p.fibers()[1].polynomial().scaled(mu));
  EXPECT_EQ(p.fiber_of_line(4), std::optional<std::size_t>(0));
  EXPECT_EQ(p.fiber_of_line(7), std::optional<std::size_t>(2));
}

TEST(ValidatePencil, Rejections) {
  const Arrangement arr = parse_arrangement(R"({"lines": [[1,0,0],[0,1,0],[0,0,1],[1,2,1]], "infinity": 3})");
  auto fiber = [&](std::size_t l) {
    Fiber f;
    f.components.push_back({l, arr.line(l).coefficients, 1});
    return f;
  };
  EXPECT_THROW(validate_pencil(arr, {fiber(0), fiber(1), fiber(3)}), InvalidInput);
  EXPECT_THROW(validate_pencil(arr, {fiber(0), fiber(0), fiber(1)}), InvalidInput);
  EXPECT_THROW(validate_pencil(arr, {fiber(0)}), InvalidInput);
}

TEST(ParsePencil, Errors) {
  const Arrangement arr = fixture::suciu();
  EXPECT_THROW(parse_pencil("{", arr), ParseError);
  EXPECT_THROW(parse_pencil(R"({"fibers": [[{"line": 9}], [{"line": 1}], [{"line": 2}]]})", arr), InvalidInput);
  EXPECT_THROW(parse_pencil(R"({"fibers": [[{"line": 1, "form": [1,0,0]}]]})", arr), ParseError);
}

TEST(OrbifoldBase, FW) {
  const PencilAnalysis pa(fixture::fw_pencil(fixture::suciu()));
  const OrbifoldBase& b = pa.base();
  EXPECT_EQ(b.genus, 0);
  EXPECT_EQ(b.punctures, (std::vector<std::string>{"0", "inf"}));
  ASSERT_EQ(b.orbifold_points.size(), 1u);
  EXPECT_EQ(b.orbifold_points[0].location, "1");
  EXPECT_EQ(b.orbifold_points[0].multiplicity, 2);
  EXPECT_EQ(b.euler_characteristic(), 0);
  EXPECT_EQ(b.b1(), 1u);
}

TEST(OrbifoldBase, PartitionAndPlainPencils) {
  const Arrangement arr = fixture::suciu();
  const PencilAnalysis pa(fixture::partition_pencil(arr, "15|26|38"));
  EXPECT_EQ(pa.base().punctures.size(), 3u);
  EXPECT_TRUE(pa.base().orbifold_points.empty());
  EXPECT_EQ(pa.base().euler_characteristic(), -1);
  // Three concurrent lines: the local pencil over P1 minus three points.
  const Arrangement three = parse_arrangement(R"({"lines": [[1,0,0],[0,1,0],[1,-1,0],[0,0,1]], "infinity": 4})");
  const PencilAnalysis local(fixture::partition_pencil(three, "1|2|3"));
  EXPECT_EQ(local.base().euler_characteristic(), -1);
  EXPECT_TRUE(local.pencil().is_local());
}

TEST(TranslationGroup, Examples) {
  const Arrangement arr = fixture::suciu();
  EXPECT_EQ(PencilAnalysis(fixture::fw_pencil(arr)).translation().group.to_string(), "Z/2");
  EXPECT_TRUE(PencilAnalysis(fixture::partition_pencil(arr, "15|26|38")).translation().group.is_trivial());
  EXPECT_EQ(translation_group(synthetic(1, 0, {2, 2})).group.to_string(), "Z/2");
}

TEST(Beauville, Examples) {
  const std::vector<std::int64_t> one{5}, two{2, 2}, mixed{2, 3};
  EXPECT_TRUE(beauville_dual(one).is_trivial());
  EXPECT_EQ(beauville_dual(two).to_string(), "Z/2");
  EXPECT_TRUE(beauville_dual(mixed).is_trivial());
}

TEST(Beauville, MatchesOrbifoldTorsion) {
  for (std::int64_t a = 2; a <= 6; ++a)
    for (std::int64_t b = a; b <= 6; ++b) {
      const std::vector<std::int64_t> m{a, b};
      const auto t = translation_group(synthetic(0, 0, m)).group;
      EXPECT_EQ(beauville_dual(m), t);
      EXPECT_EQ(oracle::beauville_order_census(m), oracle::group_order_census(t));
    }
}

TEST(Pushforward, FW) {
  const PencilAnalysis pa(fixture::fw_pencil(fixture::suciu()));
  const IntMatrix& f = pa.pushforward();
  // generators p0, pinf, q
  const std::vector<std::vector<int>> expected{
      {1, 0, 0, 1, 2, 0, 0, 0}, {0, 1, 1, 0, 0, 0, 2, 0}, {0, 0, 0, 0, 0, 1, 0, 1}};
  ASSERT_EQ(f.rows(), 3u);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 8; ++c) EXPECT_EQ(f(r, c), expected[r][c]) << r << "," << c;
}

TEST(Pushforward, PartitionFifteen) {
  const PencilAnalysis pa(fixture::partition_pencil(fixture::suciu(), "15|26|38"));
  const IntMatrix& f = pa.pushforward();
  const std::vector<std::vector<int>> expected{
      {1, 0, 0, 0, 1, 0, 0, 0}, {0, 1, 0, 0, 0, 1, 0, 0}, {0, 0, 1, 0, 0, 0, 0, 1}};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 8; ++c) EXPECT_EQ(f(r, c), expected[r][c]);
}

TEST(Components, FWTranslated) {
  const PencilAnalysis pa(fixture::fw_pencil(fixture::suciu()));
  const auto comps = pa.translated_components();
  ASSERT_EQ(comps.size(), 1u);
  const auto& w = comps[0];
  EXPECT_EQ(w.dimension(), 1u);
  EXPECT_FALSE(w.contains_trivial());
  EXPECT_EQ(w.provenance(), Provenance::translated);
  EXPECT_TRUE(w.contains(signs(fixture::kRhoW)));
  EXPECT_TRUE(w.contains(signs(fixture::kRhoWPrime)));
  const auto pts = w.points_of_order(2);
  EXPECT_EQ(pts, (std::vector<RationalCharacter>{signs(fixture::kRhoW), signs(fixture::kRhoWPrime)}));
  EXPECT_EQ(pa.induced_character(signs(fixture::kRhoW)).to_string(), "(1/2)");
  EXPECT_EQ(pa.induced_character(signs(fixture::kRhoWPrime)).to_string(), "(1/2)");
}

TEST(Components, PartitionThroughOne) {
  const PencilAnalysis pa(fixture::partition_pencil(fixture::suciu(), "15|26|38"));
  const auto comps = pa.translated_components();
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].dimension(), 2u);
  EXPECT_TRUE(comps[0].contains_trivial());
  EXPECT_EQ(comps[0].provenance(), Provenance::pencil);
}

TEST(Components, ChiZeroTrivialGroupHasNone) {
  const OrbifoldBase b = synthetic(0, 2, {});
  EXPECT_TRUE(component_characters(b, translation_group(b)).empty());
}

TEST(Corollary1, Cases) {
  const PencilAnalysis pa(fixture::fw_pencil(fixture::suciu()));
  const auto v = corollary1_check(pa.base(), component_characters(pa.base(), pa.translation()));
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.case_label, "(ii)");
  EXPECT_TRUE(v.translated_present);
  EXPECT_FALSE(v.untranslated_present);

  const OrbifoldBase neg = synthetic(0, 3, {2});
  const auto vn = corollary1_check(neg, component_characters(neg, translation_group(neg)));
  EXPECT_TRUE(vn.holds);
  EXPECT_TRUE(vn.translated_present);
  EXPECT_TRUE(vn.untranslated_present);

  const OrbifoldBase torus = synthetic(1, 0, {2, 2});
  EXPECT_EQ(corollary1_check(torus, component_characters(torus, translation_group(torus))).case_label, "(i)");
}

TEST(GenericH1, Examples) {
  const Arrangement arr = fixture::suciu();
  const PencilAnalysis fw(fixture::fw_pencil(arr));
  EXPECT_EQ(fw.generic_h1(signs(fixture::kRhoW)), 1);
  const PencilAnalysis p15(fixture::partition_pencil(arr, "15|26|38"));
  EXPECT_EQ(p15.generic_h1(RationalCharacter::trivial(8)), 1);
  const PencilAnalysis quad(fixture::partition_pencil(arr, "5|6|7|8"));
  EXPECT_EQ(quad.generic_h1(RationalCharacter::trivial(8)), 2);
}

TEST(SingularSupport, Examples) {
  const Arrangement arr = fixture::suciu();
  const PencilAnalysis fw(fixture::fw_pencil(arr));
  EXPECT_EQ(fw.singular_locations(signs(fixture::kRhoW)), (std::vector<std::string>{"1"}));
  const DualCharacter trivial{fw.translation().moduli, std::vector<Integer>(fw.translation().moduli.size())};
  EXPECT_TRUE(singular_support(fw.base(), fw.translation(), trivial).empty());
  for (std::int64_t a = 2; a <= 4; ++a)
    for (std::int64_t b = 2; b <= 4; ++b)
      for (int g = 0; g <= 1; ++g) {
        const OrbifoldBase base = synthetic(g, 0, {a, b});
        const TranslationGroup t = translation_group(base);
        for (const auto& c : t.dual_elements()) EXPECT_NE(singular_support(base, t, c).size(), 1u);
      }
}

TEST(Lift, PullbackDichotomy) {
  const PencilAnalysis fw(fixture::fw_pencil(fixture::suciu()));
  EXPECT_TRUE(fw.is_pullback(signs(fixture::kRhoW)));
  EXPECT_FALSE(fw.is_pullback(RationalCharacter({1, 2, 0, 0, 0, 0, 0, 0}, 3)));
  EXPECT_TRUE(fw.is_pullback(RationalCharacter::trivial(8)));
  EXPECT_THROW(fw.induced_character(RationalCharacter({1, 2, 0, 0, 0, 0, 0, 0}, 3)), InvalidInput);
}
