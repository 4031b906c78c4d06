#include <gtest/gtest.h>

#include <ostream>
#include <string>

#include "curvforge/curvature.hpp"
#include "curvforge/osserman.hpp"
#include "curvforge/sampling.hpp"
#include "testkit.hpp"

namespace curvforge {
namespace {

struct Case {
  std::size_t p;
  std::size_t q;
  std::uint64_t seed;
};

void PrintTo(const Case& c, std::ostream* os) {
  *os << "(" << c.p << "," << c.q << ") seed " << c.seed;
}

class RandomTensor : public ::testing::TestWithParam<Case> {
 protected:
  CurvatureTensor tensor() const {
    const Case c = GetParam();
    return testkit::random_act({c.p + c.q, c.p, c.q, c.seed, 2, 5});
  }
};

TEST_P(RandomTensor, RoundTripIsExact) {
  const CurvatureTensor r = tensor();
  const CurvatureTensor back = reconstruct(totalize(jacobi_family_of(r)));
  EXPECT_EQ(back, r);
  EXPECT_TRUE(back.verified());
}

TEST_P(RandomTensor, JacobiOperatorIdentities) {
  const CurvatureTensor r = tensor();
  SampleRng rng(GetParam().seed);
  for (int i = 0; i < 10; ++i) {
    const Vector x = rng.vector(r.dim());
    const Rational t = rng.rational();
    const Endomorphism jx = jacobi_operator(r, x);
    EXPECT_TRUE((jx * x).is_zero());
    EXPECT_TRUE(is_self_adjoint(r.space(), jx));
    EXPECT_EQ(jacobi_operator(r, t * x), t * t * jx);
  }
}

TEST_P(RandomTensor, TotalizedFamilyAtNullVectors) {
  const CurvatureTensor r = tensor();
  const ScalarProduct& g = r.space();
  NullSampler nulls(g, GetParam().seed);
  if (!nulls.available()) GTEST_SKIP() << "definite metric";
  const JacobiFamily k = jacobi_family_of(r);
  const JacobiFamily total = totalize(k);
  SampleRng rng(GetParam().seed + 1);
  for (int i = 0; i < 5; ++i) {
    const Vector n = nulls.next();
    const Endomorphism kn = total(n);
    EXPECT_TRUE(is_self_adjoint(g, kn));
    EXPECT_TRUE((kn * n).is_zero());
    for (int j = 0; j < 4; ++j) {
      const Vector x = rng.nonnull_vector(g);
      EXPECT_EQ(g.inner(kn * x, x), g.inner(k(x) * n, n));
    }
  }
}

TEST_P(RandomTensor, PolarizationIdentityInT) {
  const JacobiFamily k = totalize(jacobi_family_of(tensor()));
  SampleRng rng(GetParam().seed + 2);
  for (int i = 0; i < 10; ++i) {
    const Vector x = rng.vector(k.space().dim());
    const Vector y = rng.vector(k.space().dim());
    Rational t = rng.rational();
    while (t == 0 || t == 1) t = rng.rational();
    const Endomorphism lhs = k(x + t * y) - k(x) - t * t * k(y);
    const Endomorphism rhs = t * (k(x + y) - k(x) - k(y));
    EXPECT_EQ(lhs, rhs);
  }
}

TEST_P(RandomTensor, MuFormPathAgreesWithPolarization) {
  const JacobiFamily k = totalize(jacobi_family_of(tensor()));
  SampleRng rng(GetParam().seed + 3);
  std::vector<Quadruple> quads;
  const std::size_t n = k.space().dim();
  for (int i = 0; i < 10; ++i) quads.push_back({rng.vector(n), rng.vector(n), rng.vector(n), rng.vector(n)});
  const EquivalenceReport report = verify_mu_form_equivalence(k, quads);
  EXPECT_TRUE(report.agree);
  EXPECT_EQ(report.checked, quads.size());
}

INSTANTIATE_TEST_SUITE_P(Signatures, RandomTensor,
                         ::testing::Values(Case{3, 0, 1}, Case{2, 1, 2}, Case{1, 2, 3},
                                           Case{4, 0, 4}, Case{1, 3, 5}, Case{2, 2, 6},
                                           Case{1, 4, 7}, Case{3, 2, 8}),
                         [](const ::testing::TestParamInfo<Case>& info) {
                           return "p" + std::to_string(info.param.p) + "q" +
                                  std::to_string(info.param.q);
                         });

TEST(ForwardIdentity, CliffordAndSubstitutedFamilies) {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const CliffordSpec spec = testkit::random_clifford_spec(4, seed == 1, seed);
    const CurvatureTensor r = build_clifford(spec);
    const JacobiFamily closed = clifford_family(spec);
    const CurvatureTensor back = reconstruct(closed);
    EXPECT_EQ(back, r);

    const SpectralDecomposition d = spectral_decomposition(r, Vector::basis(4, 0));
    std::vector<Rational> mu;
    for (std::size_t i = 0; i < d.k(); ++i) mu.push_back(Rational(static_cast<long>(2 * i + 1)));
    const JacobiFamily sub = totalize(eigen_substitute(r, mu));
    const CurvatureTensor s = reconstruct(sub);
    EXPECT_TRUE(s.verified());
    const SampleSet samples = make_samples(r.space(), FamilyDomain::total, 40, seed);
    EXPECT_TRUE(jacobi_mismatches(s, sub, samples.vectors).empty());
  }
}

}  // namespace
}  // namespace curvforge
