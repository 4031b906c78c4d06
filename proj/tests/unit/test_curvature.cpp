#include <gtest/gtest.h>

#include <algorithm>

#include "curvforge/curvature.hpp"
#include "curvforge/error.hpp"
#include "curvforge/sampling.hpp"
#include "testkit.hpp"

namespace curvforge {
namespace {

CurvatureTensor sample_tensor(std::size_t p, std::size_t q, std::uint64_t seed,
                              std::size_t forms = 2) {
  testkit::GeneratorConfig cfg;
  cfg.dim = p + q;
  cfg.p = p;
  cfg.q = q;
  cfg.seed = seed;
  cfg.num_forms = forms;
  return testkit::random_act(cfg);
}

// R¹ written out entry by entry from g(Y,Z)g(X,W) − g(X,Z)g(Y,W).
std::vector<Rational> r1_components(const Matrix& g) {
  const std::size_t n = g.rows();
  std::vector<Rational> c;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) c.push_back(g(j, k) * g(i, l) - g(i, k) * g(j, l));
  return c;
}

TEST(VerifySymmetries, ConstantCurvature) {
  const ScalarProduct g = ScalarProduct::euclidean(3);
  const CurvatureTensor r1 = constant_curvature_tensor(g);
  EXPECT_EQ(r1.components(), r1_components(g.metric()));
  EXPECT_TRUE(r1.verified());
  EXPECT_TRUE(verify_symmetries(r1).verified());
}

TEST(VerifySymmetries, Zero) {
  EXPECT_TRUE(CurvatureTensor::zero(ScalarProduct::diagonal(2, 2)).verified());
}

TEST(VerifySymmetries, PerturbedEntryIsReported) {
  const ScalarProduct g = ScalarProduct::euclidean(3);
  std::vector<Rational> c = constant_curvature_tensor(g).components();
  c[((1 * 3 + 2) * 3 + 1) * 3 + 2] += 1;
  const CurvatureTensor bad(g, c);
  EXPECT_FALSE(bad.verified());
  const SymmetryReport report = verify_symmetries(bad);
  EXPECT_FALSE(report.antisymmetry_first_pair_ok);
  EXPECT_GT(report.violation_count, 0u);
  const auto hit = std::find_if(report.violations.begin(), report.violations.end(), [](const auto& v) {
    return v.identity == Symmetry::antisymmetry_first_pair &&
           v.indices == std::array<std::size_t, 4>{1, 2, 1, 2};
  });
  EXPECT_NE(hit, report.violations.end());
}

TEST(VerifySymmetries, TruncatesViolationList) {
  const ScalarProduct g = ScalarProduct::euclidean(3);
  std::vector<Rational> c(81);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<long>(i);
  const SymmetryReport report = verify_symmetries(CurvatureTensor(g, c));
  EXPECT_EQ(report.violations.size(), kMaxSymmetryViolations);
  EXPECT_GT(report.violation_count, kMaxSymmetryViolations);
}

TEST(CurvatureTensor, RejectsWrongSize) {
  EXPECT_THROW(CurvatureTensor(ScalarProduct::euclidean(2), std::vector<Rational>(8)), InputError);
}

TEST(JacobiOperator, ConstantCurvatureExamples) {
  const ScalarProduct g = ScalarProduct::euclidean(3);
  const CurvatureTensor r1 = constant_curvature_tensor(g);
  const std::vector<Rational> d011{0, 1, 1};
  const std::vector<Rational> d044{0, 4, 4};
  EXPECT_EQ(jacobi_operator(r1, Vector{1, 0, 0}), Matrix::diagonal(d011));
  EXPECT_EQ(testkit::oracle_jacobi(r1, Vector{1, 0, 0}), Matrix::diagonal(d011));
  EXPECT_EQ(jacobi_operator(r1, Vector{2, 0, 0}), Matrix::diagonal(d044));
  EXPECT_TRUE(jacobi_operator(CurvatureTensor::zero(g), Vector{1, 2, 3}).is_zero());
}

TEST(JacobiOperator, AgreesWithOracle) {
  const CurvatureTensor t = sample_tensor(2, 2, 21);
  SampleRng rng(21);
  for (int i = 0; i < 20; ++i) {
    const Vector x = rng.vector(4);
    EXPECT_EQ(jacobi_operator(t, x), testkit::oracle_jacobi(t, x));
  }
}

TEST(Reconstruct, ZeroFamily) {
  const ScalarProduct g = ScalarProduct::diagonal(2, 1);
  EXPECT_EQ(reconstruct(JacobiFamily::zero(g)), CurvatureTensor::zero(g));
}

TEST(Reconstruct, RoundTripsRandomTensor) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const CurvatureTensor t = sample_tensor(2 + seed % 2, 1, seed, 3);
    EXPECT_EQ(reconstruct(totalize(jacobi_family_of(t))), t);
  }
}

TEST(Reconstruct, RejectsEpsilonIdentityNamingAnnihilation) {
  const JacobiFamily eps = totalize(JacobiFamily::epsilon_identity(ScalarProduct::euclidean(3)));
  try {
    reconstruct(eps);
    FAIL() << "expected rejection";
  } catch (const AxiomRejection& e) {
    EXPECT_EQ(e.axiom(), Axiom::annihilation);
    EXPECT_NE(std::string(e.what()).find("annihilation"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("K_X X = 0"), std::string::npos);
  }
}

TEST(Reconstruct, UnsafeModeSkipsTheGate) {
  ReconstructOptions opts;
  opts.enforce_axioms = false;
  const JacobiFamily eps = totalize(JacobiFamily::epsilon_identity(ScalarProduct::euclidean(3)));
  const CurvatureTensor r = reconstruct(eps, opts);
  std::vector<Vector> basis{Vector{1, 0, 0}, Vector{0, 1, 0}, Vector{0, 0, 1}};
  EXPECT_FALSE(jacobi_mismatches(r, eps, basis).empty());
}

TEST(Reconstruct, NeedsTotalFamily) {
  const JacobiFamily k = jacobi_family_of(constant_curvature_tensor(ScalarProduct::euclidean(2)));
  EXPECT_THROW(reconstruct(k), PreconditionError);
}

TEST(LinearCombination, Examples) {
  const ScalarProduct g = ScalarProduct::euclidean(3);
  const CurvatureTensor r = sample_tensor(3, 0, 30);
  const std::vector<std::pair<Rational, CurvatureTensor>> cancel{{1, r}, {-1, r}};
  EXPECT_EQ(linear_combination(g, cancel), CurvatureTensor::zero(g));

  const CurvatureTensor r1 = constant_curvature_tensor(g);
  EXPECT_EQ(r1(1, 2, 2, 1), 1);
  const std::vector<std::pair<Rational, CurvatureTensor>> five{{5, r1}};
  EXPECT_EQ(linear_combination(g, five)(1, 2, 2, 1), 5);

  EXPECT_EQ(linear_combination(g, {}), CurvatureTensor::zero(g));

  const std::vector<std::pair<Rational, CurvatureTensor>> mixed{
      {1, r1}, {1, constant_curvature_tensor(ScalarProduct::diagonal(2, 1))}};
  EXPECT_THROW(linear_combination(g, mixed), StructureError);
}

TEST(MuFormEquivalence, Examples) {
  const ScalarProduct g = ScalarProduct::euclidean(3);
  const JacobiFamily r1 = jacobi_family_of(constant_curvature_tensor(g), FamilyDomain::total);
  const Vector e1{1, 0, 0}, e2{0, 1, 0};
  EXPECT_EQ(mu_form_value(r1, e1, e2, e2, e1), 2 * reconstruction_value(r1, e1, e2, e2, e1));
  EXPECT_EQ(reconstruction_value(r1, e1, e2, e2, e1), 3);
  EXPECT_EQ(mu_form_value(r1, e1, e2, Vector{1, 2, 3}, Vector{1, 2, 3}), 0);
  EXPECT_TRUE(verify_mu_form_equivalence(r1, {{e1, e2, e2, e1}}).agree);
  const JacobiFamily zero = JacobiFamily::zero(g);
  EXPECT_EQ(mu_form_value(zero, e1, e2, e2, e1), 0);
}

TEST(Contract, AgreesWithOracle) {
  const CurvatureTensor t = sample_tensor(1, 3, 33);
  SampleRng rng(33);
  for (int i = 0; i < 100; ++i) {
    const Vector x = rng.vector(4), y = rng.vector(4), z = rng.vector(4), w = rng.vector(4);
    EXPECT_EQ(contract(t, x, y, z, w), testkit::oracle_contract(t, x, y, z, w));
  }
}

}  // namespace
}  // namespace curvforge
