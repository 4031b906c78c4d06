#include <gtest/gtest.h>

#include "curvforge/polynomial.hpp"
#include "curvforge/sampling.hpp"

namespace curvforge {
namespace {

Polynomial poly(std::initializer_list<Rational> ascending) { return Polynomial(ascending); }

TEST(CharPoly, Identity3) {
  EXPECT_EQ(char_poly(Matrix::identity(3)), poly({-1, 3, -3, 1}));
  EXPECT_EQ(to_string(char_poly(Matrix::identity(3))), "x^3 - 3*x^2 + 3*x - 1");
}

TEST(CharPoly, NilpotentJordanBlock) {
  EXPECT_EQ(char_poly(Matrix{{0, 1}, {0, 0}}), poly({0, 0, 1}));
}

TEST(CharPoly, Diagonal23) {
  const std::vector<Rational> d{2, 3};
  EXPECT_EQ(char_poly(Matrix::diagonal(d)), poly({6, -5, 1}));
}

TEST(CharPoly, VanishesAtDiagonalEntries) {
  SampleRng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> d;
    for (int i = 0; i < 5; ++i) d.push_back(rng.rational());
    const Polynomial p = char_poly(Matrix::diagonal(d));
    for (const auto& v : d) EXPECT_EQ(p(v), 0);
  }
}

TEST(CharPoly, CayleyHamilton) {
  SampleRng rng(5);
  Matrix a(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) a(i, j) = rng.rational();
  }
  EXPECT_TRUE(evaluate(char_poly(a), a).is_zero());
}

TEST(MinimalPoly, DistinguishesJordanFromScalar) {
  EXPECT_EQ(minimal_poly(Matrix::identity(3)), poly({-1, 1}));
  EXPECT_EQ(minimal_poly(Matrix{{0, 1}, {0, 0}}), poly({0, 0, 1}));
}

TEST(Polynomial, DivmodAndGcd) {
  const Polynomial a = poly({-1, 0, 1});  // x² − 1
  const Polynomial b = poly({1, 1});      // x + 1
  const auto [q, r] = divmod(a, b);
  EXPECT_EQ(q, poly({-1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(a, poly({1, 2, 1})), b);
  EXPECT_EQ(squarefree_part(poly({1, 2, 1})), b);
}

TEST(Polynomial, SturmCountsRealRoots) {
  EXPECT_EQ(count_real_roots(poly({-2, 0, 1})), 2);
  EXPECT_EQ(count_real_roots(poly({1, 0, 1})), 0);
  EXPECT_EQ(count_real_roots(poly({0, -1, 0, 1})), 3);
}

TEST(Polynomial, FactorsRationalRootsWithMultiplicity) {
  // x(x + 2)(x − 1)²
  const Polynomial p = poly({0, 2, -3, 0, 1});
  const auto f = factor_rational_roots(p);
  ASSERT_TRUE(f.fully_split());
  ASSERT_EQ(f.roots.size(), 3u);
  EXPECT_EQ(f.roots[0].value, -2);
  EXPECT_EQ(f.roots[1].value, 0);
  EXPECT_EQ(f.roots[2].value, 1);
  EXPECT_EQ(f.roots[2].multiplicity, 2);
}

TEST(Polynomial, IrrationalRootsStayInRest) {
  const auto f = factor_rational_roots(poly({-2, 0, 1}) * poly({-make_rational(1, 3), 1}));
  EXPECT_FALSE(f.fully_split());
  ASSERT_EQ(f.roots.size(), 1u);
  EXPECT_EQ(f.roots[0].value, make_rational(1, 3));
  EXPECT_EQ(f.rest.degree(), 2);
}

TEST(Polynomial, LargeCoefficientRootsAreFound) {
  const Rational a = make_rational(1234567, 89);
  const Rational b = make_rational(-7654321, 101);
  const Polynomial p = poly({-a, 1}) * poly({-b, 1}) * poly({-b, 1});
  const auto f = factor_rational_roots(p);
  ASSERT_TRUE(f.fully_split());
  EXPECT_EQ(f.roots[0].value, b);
  EXPECT_EQ(f.roots[0].multiplicity, 2);
  EXPECT_EQ(f.roots[1].value, a);
}

}  // namespace
}  // namespace curvforge
