#include <gtest/gtest.h>

#include <random>

#include "charvar/errors.hpp"
#include "charvar/fox.hpp"
#include "fixtures.hpp"

using namespace charvar;

namespace {

LaurentPoly t(std::size_t n, std::size_t i) {
  LaurentPoly::Exponent e(n, 0);
  e[i] = 1;
  return LaurentPoly::monomial(e);
}

LaurentPoly one(std::size_t n) { return LaurentPoly::constant(n, 1); }

FreeWord random_word(std::mt19937_64& rng, std::size_t n, std::size_t len) {
  std::uniform_int_distribution<int> g(1, static_cast<int>(n));
  std::bernoulli_distribution inv(0.5);
  FreeWord w;
  for (std::size_t k = 0; k < len; ++k) w.push_back(inv(rng) ? -g(rng) : g(rng));
  return w;
}

// sum_i dw/dx_i (t_i - 1) == w - 1
bool fundamental_identity(const FreeWord& w, std::size_t n) {
  LaurentPoly lhs(n);
  for (std::size_t i = 0; i < n; ++i) lhs = lhs + fox_derivative(w, i, n) * (t(n, i) - one(n));
  return lhs == LaurentPoly::monomial(abelian_image(w, n)) - one(n);
}

}  // namespace

TEST(Fox, BasicDerivatives) {
  EXPECT_EQ(fox_derivative({1}, 0, 1), one(1));
  LaurentPoly::Exponent inv{-1};
  EXPECT_EQ(fox_derivative({-1}, 0, 1), LaurentPoly::monomial(inv, -1));
  EXPECT_EQ(fox_derivative({1, 2, -1}, 1, 2), t(2, 0));
  EXPECT_THROW(fox_derivative({3}, 0, 2), InvalidInput);
  EXPECT_THROW(fox_derivative({1}, 2, 2), InvalidInput);
}

TEST(Fox, CommutatorRow) {
  const AlexanderMatrix a = alexander_matrix(GroupPresentation{2, {{1, 2, -1, -2}}});
  ASSERT_EQ(a.rows(), 1u);
  EXPECT_EQ(a.entries[0][0], one(2) - t(2, 1));
  EXPECT_EQ(a.entries[0][1], t(2, 0) - one(2));
}

TEST(Fox, FundamentalIdentityOnRandomWords) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> len(0, 24);
  for (int k = 0; k < 1000; ++k) {
    const std::size_t n = 1 + k % 5;
    const FreeWord w = random_word(rng, n, len(rng));
    ASSERT_TRUE(fundamental_identity(w, n)) << to_string(w);
  }
}

TEST(Fox, ProductRule) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 3;
    const FreeWord u = random_word(rng, n, 8), v = random_word(rng, n, 8);
    FreeWord uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    const LaurentPoly ubar = LaurentPoly::monomial(abelian_image(u, n));
    for (std::size_t i = 0; i < n; ++i)
      EXPECT_EQ(fox_derivative(uv, i, n), fox_derivative(u, i, n) + ubar * fox_derivative(v, i, n));
  }
}

TEST(Fox, RingAxioms) {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 2;
    const auto a = fox_derivative(random_word(rng, n, 6), 0, n);
    const auto b = fox_derivative(random_word(rng, n, 6), 1, n);
    const auto c = fox_derivative(random_word(rng, n, 6), 0, n);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Fox, SuciuAlexanderMatrix) {
  const Arrangement arr = fixture::suciu();
  const GroupPresentation pres = randell_presentation(wiring_diagram(arr, std::uint64_t{1}));
  const AlexanderMatrix a = alexander_matrix(pres);
  EXPECT_EQ(a.rows(), 12u);
  EXPECT_EQ(a.n_generators, 7u);
  for (const auto& row : a.entries)
    for (const auto& e : row) EXPECT_EQ(e.evaluate_at_one(), 0);
  for (const auto& r : pres.relators) EXPECT_TRUE(fundamental_identity(r, 7));
}
