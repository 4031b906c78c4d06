#include <gtest/gtest.h>

#include "curvforge/error.hpp"
#include "curvforge/osserman.hpp"
#include "curvforge/sampling.hpp"
#include "testkit.hpp"

namespace curvforge {
namespace {

const Matrix kJ1{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
const Matrix kJ2{{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}};
const Matrix kSwap{{0, 0, 1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, -1, 0, 0}};

CliffordSpec kahler(const Rational& mu0 = 1, const Rational& mu1 = 1) {
  return {ScalarProduct::euclidean(4), {mu0, mu1}, {{kJ1, StructureKind::complex}}};
}

CliffordSpec neutral_product() {
  return {ScalarProduct::diagonal(2, 2), {1, 1}, {{kSwap, StructureKind::product}}};
}

std::string structure_error(const CliffordSpec& spec) {
  try {
    validate(spec);
  } catch (const StructureError& e) {
    return e.what();
  }
  return "";
}

TEST(BuildClifford, NoStructuresGivesConstantCurvature) {
  const ScalarProduct g = ScalarProduct::diagonal(2, 1);
  EXPECT_EQ(build_clifford({g, {1}, {}}), constant_curvature_tensor(g));
}

TEST(BuildClifford, ProductStructureNeedsNeutralSignature) {
  const Matrix swap{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
  const CliffordSpec spec{ScalarProduct::euclidean(4), {1, 1}, {{swap, StructureKind::product}}};
  EXPECT_NE(structure_error(spec).find("neutral"), std::string::npos);
  EXPECT_THROW(build_clifford(spec), StructureError);
}

TEST(BuildClifford, KahlerIsVerifiedAndOsserman) {
  const CurvatureTensor r = build_clifford(kahler());
  EXPECT_TRUE(r.verified());
  const OssermanVerdict v = is_osserman(r);
  EXPECT_TRUE(v.is_osserman);
  EXPECT_EQ(v.k_root, 2);
  // Spectrum {0, −2, 1, 1}.
  EXPECT_EQ(v.reference_char_poly, Polynomial(std::vector<Rational>{0, 2, -3, 0, 1}));
}

TEST(BuildClifford, NeutralProductSpectrum) {
  const OssermanVerdict v = is_osserman(build_clifford(neutral_product()));
  EXPECT_TRUE(v.is_osserman);
  // Spectrum {0, 4, 1, 1}: ε_{JX} = −ε_X flips the sign of the R^J term.
  EXPECT_EQ(v.reference_char_poly, Polynomial(std::vector<Rational>{0, -4, 9, -6, 1}));
}

TEST(Validate, NamesTheBrokenCondition) {
  const ScalarProduct g = ScalarProduct::euclidean(4);
  EXPECT_NE(structure_error({g, {1}, {{kJ1, StructureKind::complex}}}).find("coefficient"),
            std::string::npos);
  EXPECT_NE(structure_error({g, {1, 1}, {{Matrix::identity(4), StructureKind::complex}}}).find("skew"),
            std::string::npos);
  const Matrix half = make_rational(1, 2) * kJ1;
  EXPECT_NE(structure_error({g, {1, 1}, {{half, StructureKind::complex}}}).find("J^2"),
            std::string::npos);
  EXPECT_NE(structure_error({g, {1, 1, 1}, {{kJ1, StructureKind::complex}, {kJ1, StructureKind::complex}}})
                .find("anticommute"),
            std::string::npos);
  EXPECT_EQ(structure_error({g, {1, 1, 1, 1},
                             {{kJ1, StructureKind::complex},
                              {kJ2, StructureKind::complex},
                              {kJ1 * kJ2, StructureKind::complex}}}),
            "");
}

TEST(CliffordFamily, ClosedFormMatchesTensor) {
  for (const CliffordSpec& spec : {kahler(2, -1), neutral_product()}) {
    const CurvatureTensor r = build_clifford(spec);
    const JacobiFamily k = clifford_family(spec);
    SampleRng rng(8);
    for (int i = 0; i < 20; ++i) {
      const Vector x = rng.vector(4);
      EXPECT_EQ(k(x), testkit::oracle_jacobi(r, x));
    }
    NullSampler nulls(spec.space, 8);
    if (nulls.available()) {
      for (int i = 0; i < 10; ++i) {
        const Vector n = nulls.next();
        EXPECT_EQ(k(n), jacobi_operator(r, n));
      }
    }
  }
}

TEST(CliffordFamily, JacobiAnnihilatesAndIsSelfAdjoint) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const CliffordSpec spec = testkit::random_clifford_spec(4, seed % 2 == 1, seed);
    const CurvatureTensor r = build_clifford(spec);
    ASSERT_TRUE(r.verified());
    SampleRng rng(seed);
    for (int i = 0; i < 10; ++i) {
      const Vector x = rng.vector(4);
      const Endomorphism jx = jacobi_operator(r, x);
      EXPECT_TRUE((jx * x).is_zero());
      EXPECT_TRUE(is_self_adjoint(r.space(), jx));
    }
  }
}

TEST(CliffordFamily, RandomSpecsAreOssermanDiagonalizableProportional) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    for (const auto& [dim, neutral] : std::vector<std::pair<std::size_t, bool>>{
             {4, false}, {4, true}, {6, false}, {6, true}}) {
      const CurvatureTensor r = build_clifford(testkit::random_clifford_spec(dim, neutral, seed));
      const OssermanVerdict v = is_osserman(r, 12, seed);
      EXPECT_TRUE(v.is_osserman) << dim << neutral << seed;
      EXPECT_TRUE(v.diagonalizable) << dim << neutral << seed;
      EXPECT_TRUE(check_proportionality(r, sample_pairs(r.space(), 6, seed)).holds);
    }
  }
}

TEST(EigenSubstitute, IdentitySubstitutionReproducesTensor) {
  const CurvatureTensor r = build_clifford(kahler());
  const JacobiFamily k = eigen_substitute(r, {-2, 1});
  EXPECT_EQ(k.domain(), FamilyDomain::nonnull_only);
  EXPECT_EQ(k.provenance(), Provenance::eigen_substitution);
  EXPECT_EQ(reconstruct(totalize(k)), r);
}

TEST(EigenSubstitute, ScalesConstantCurvature) {
  const ScalarProduct g = ScalarProduct::diagonal(2, 1);
  const CurvatureTensor r1 = constant_curvature_tensor(g);
  const std::vector<std::pair<Rational, CurvatureTensor>> five{{5, r1}};
  EXPECT_EQ(reconstruct(totalize(eigen_substitute(r1, {5}))), linear_combination(g, five));
}

TEST(EigenSubstitute, FreshEigenvaluesKeepMultiplicities) {
  const CurvatureTensor r = build_clifford(kahler());
  const CurvatureTensor s = reconstruct(totalize(eigen_substitute(r, {make_rational(7, 2), -3})));
  EXPECT_TRUE(s.verified());
  const OssermanVerdict v = is_osserman(s, 32, 0);
  EXPECT_TRUE(v.is_osserman);
  const Polynomial expected = Polynomial::linear_factor(0) *
                              Polynomial::linear_factor(make_rational(7, 2)) *
                              Polynomial::linear_factor(-3) * Polynomial::linear_factor(-3);
  EXPECT_EQ(v.reference_char_poly, expected);
}

TEST(EigenSubstitute, HypothesisFailures) {
  const CurvatureTensor kahler_r = build_clifford(kahler());
  EXPECT_THROW(eigen_substitute(kahler_r, {1}), InputError);
  const std::vector<Rational> d{1, 2, 3};
  const CurvatureTensor not_osserman = form_tensor(ScalarProduct::euclidean(3), Matrix::diagonal(d));
  EXPECT_THROW(eigen_substitute(not_osserman, {1, 2}), PreconditionError);
  const JacobiFamily k = eigen_substitute(constant_curvature_tensor(ScalarProduct::diagonal(1, 1)), {2});
  EXPECT_THROW(k(Vector{1, 1}), DomainError);
}

TEST(RandomCliffordSpec, DeterministicAndValid) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const CliffordSpec a = testkit::random_clifford_spec(4, seed % 2 == 0, seed);
    const CliffordSpec b = testkit::random_clifford_spec(4, seed % 2 == 0, seed);
    EXPECT_NO_THROW(validate(a));
    ASSERT_EQ(a.structures.size(), b.structures.size());
    for (std::size_t i = 0; i < a.structures.size(); ++i) {
      EXPECT_EQ(a.structures[i].matrix, b.structures[i].matrix);
    }
  }
  EXPECT_THROW(testkit::random_clifford_spec(5, false, 0), InputError);
}

}  // namespace
}  // namespace curvforge
