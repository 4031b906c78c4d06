#include <gtest/gtest.h>

#include "curvforge/curvature.hpp"
#include "curvforge/error.hpp"
#include "curvforge/jacobi_family.hpp"
#include "curvforge/sampling.hpp"
#include "testkit.hpp"

namespace curvforge {
namespace {

std::vector<std::pair<Vector, Vector>> random_pairs(const ScalarProduct& g, int count,
                                                    std::uint64_t seed) {
  SampleRng rng(seed);
  std::vector<std::pair<Vector, Vector>> out;
  for (int i = 0; i < count; ++i) {
    Vector x = rng.nonnull_vector(g);
    out.emplace_back(x, rng.nonnull_vector(g));
  }
  return out;
}

CurvatureTensor sample_tensor(std::size_t p, std::size_t q, std::uint64_t seed) {
  testkit::GeneratorConfig cfg;
  cfg.dim = p + q;
  cfg.p = p;
  cfg.q = q;
  cfg.seed = seed;
  return testkit::random_act(cfg);
}

TEST(Compatibility, EpsilonIdentityPasses) {
  const JacobiFamily k = JacobiFamily::epsilon_identity(ScalarProduct::euclidean(2));
  const AxiomReport r = check_compatibility(k, random_pairs(k.space(), 40, 1));
  EXPECT_TRUE(r.compatible_ok);
  EXPECT_EQ(r.checks, 40u);
}

TEST(Compatibility, TensorFamilyPasses) {
  const CurvatureTensor t = sample_tensor(2, 1, 8);
  ASSERT_TRUE(t.verified());
  // Oracle: pair exchange of the source tensor gives R(Y,X,X,Y) = R(X,Y,Y,X).
  for (const auto& [x, y] : random_pairs(t.space(), 20, 2)) {
    EXPECT_EQ(testkit::oracle_contract(t, y, x, x, y), testkit::oracle_contract(t, x, y, y, x));
  }
  EXPECT_TRUE(check_compatibility(jacobi_family_of(t), random_pairs(t.space(), 40, 2)).compatible_ok);
}

TEST(Compatibility, SquaredLinearFormFails) {
  const ScalarProduct g = ScalarProduct::euclidean(2);
  const Vector a{1, 0};
  const JacobiFamily k(g, FamilyDomain::total, Provenance::user_table, [g, a](const Vector& x) {
    const Rational s = g.inner(x, a);
    return s * s * Matrix::identity(2);
  });
  const AxiomReport r = check_compatibility(k, {{Vector{1, 0}, Vector{0, 1}}});
  EXPECT_FALSE(r.compatible_ok);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(std::get<Rational>(r.witnesses[0].residual), 1);
  EXPECT_TRUE(replay(k, r.witnesses[0]));
}

TEST(Annihilation, Examples) {
  const ScalarProduct g = ScalarProduct::euclidean(2);
  const AxiomReport eps = check_annihilation(JacobiFamily::epsilon_identity(g), {Vector{1, 0}});
  EXPECT_FALSE(eps.annihilation_ok);
  ASSERT_EQ(eps.witnesses.size(), 1u);
  EXPECT_EQ(eps.witnesses[0].vectors[0], (Vector{1, 0}));
  EXPECT_EQ(std::get<Vector>(eps.witnesses[0].residual), (Vector{1, 0}));

  EXPECT_TRUE(check_annihilation(JacobiFamily::zero(g), {Vector{1, 0}, Vector{3, 4}}).annihilation_ok);

  const CurvatureTensor t = sample_tensor(3, 1, 3);
  SampleRng rng(3);
  std::vector<Vector> xs;
  for (int i = 0; i < 30; ++i) xs.push_back(rng.vector(4));
  EXPECT_TRUE(check_annihilation(jacobi_family_of(t, FamilyDomain::total), xs).annihilation_ok);
}

TEST(Homogeneity, TensorFamilyScales) {
  const CurvatureTensor t = sample_tensor(2, 2, 5);
  const JacobiFamily k = jacobi_family_of(t, FamilyDomain::total);
  SampleRng rng(5);
  for (int i = 0; i < 10; ++i) {
    const Vector x = rng.vector(4);
    EXPECT_EQ(k(Rational(2) * x), Rational(4) * k(x));
    EXPECT_EQ(k(-x), k(x));
  }
  std::vector<std::pair<Vector, Rational>> samples{{Vector{1, 2, 0, 1}, 1},
                                                   {Vector{1, 2, 0, 1}, 2},
                                                   {Vector{0, 1, 1, 3}, -1}};
  EXPECT_TRUE(check_homogeneity(k, samples).homogeneity_ok);
  EXPECT_THROW(check_homogeneity(k, {{Vector{1, 0, 0, 0}, 0}}), PreconditionError);
}

TEST(Cocycle, ConstantCurvatureHolds) {
  const ScalarProduct g = ScalarProduct::euclidean(3);
  const JacobiFamily k = jacobi_family_of(constant_curvature_tensor(g), FamilyDomain::total);
  auto pairs = random_pairs(g, 40, 6);
  pairs.emplace_back(Vector{1, 2, 3}, Vector{0, 0, 0});
  pairs.emplace_back(Vector{1, 2, 3}, Vector{1, 2, 3});
  EXPECT_TRUE(check_cocycle(k, pairs).cocycle_ok);
}

TEST(MuForm, Examples) {
  const ScalarProduct g = ScalarProduct::diagonal(2, 1);
  const JacobiFamily r1 = jacobi_family_of(constant_curvature_tensor(g), FamilyDomain::total);
  for (const auto& [x, y] : random_pairs(g, 20, 7)) {
    const Rational cross = g.inner(x, y);
    EXPECT_EQ(mu_form(r1, x, y), g.squared_norm(x) * g.squared_norm(y) - cross * cross);
    EXPECT_EQ(mu_form(r1, x, x), 0);
  }
  EXPECT_EQ(mu_form(JacobiFamily::zero(g), Vector{1, 0, 0}, Vector{0, 1, 0}), 0);
}

TEST(NullExtension, ConstantCurvatureOnLorentzPlane) {
  const ScalarProduct g = ScalarProduct::diagonal(1, 1);
  const JacobiFamily k = jacobi_family_of(constant_curvature_tensor(g));
  const Vector n{1, 1};
  const Endomorphism kn = extend_to_null(k, n);
  EXPECT_EQ(kn * (Vector{1, 0}), (Vector{-1, -1}));
  // Closed form K_N Y = −g(N, Y)·N.
  const Endomorphism expected = Rational(-1) * Matrix::outer(n, g.lower(n));
  EXPECT_EQ(kn, expected);
}

TEST(NullExtension, IndependentOfDirection) {
  const CurvatureTensor t = sample_tensor(1, 2, 10);
  const JacobiFamily k = jacobi_family_of(t);
  NullSampler nulls(t.space(), 10);
  for (int i = 0; i < 10; ++i) {
    const Vector n = nulls.next();
    const auto dirs = admissible_directions(t.space(), n, 3);
    ASSERT_EQ(dirs.size(), 3u);
    const Endomorphism first = extend_to_null_via(k, n, dirs[0]);
    EXPECT_EQ(first, extend_to_null_via(k, n, dirs[1]));
    EXPECT_EQ(first, extend_to_null_via(k, n, dirs[2]));
    EXPECT_EQ(first, jacobi_operator(t, n));
  }
}

TEST(NullExtension, ScaledBasisDirectionsAreAdmissible) {
  const ScalarProduct g = ScalarProduct::diagonal(1, 1);
  const Vector n{1, 1};
  for (const auto& x : admissible_directions(g, n, 4)) {
    EXPECT_NE(g.squared_norm(x) * g.squared_norm(n + x) * g.squared_norm(n - x), 0);
  }
  EXPECT_THROW(extend_to_null_via(JacobiFamily::zero(g), n, Vector{1, 1}), PreconditionError);
}

TEST(NullExtension, ZeroFamily) {
  const ScalarProduct g = ScalarProduct::diagonal(2, 1);
  const JacobiFamily zero(g, FamilyDomain::nonnull_only, Provenance::from_tensor,
                          [](const Vector& x) { return Matrix(x.size(), x.size()); });
  EXPECT_TRUE(extend_to_null(zero, Vector{1, 0, 1}).is_zero());
}

TEST(Totalize, MatchesTensorAtNullAndZero) {
  const ScalarProduct g = ScalarProduct::diagonal(2, 2);
  const CurvatureTensor r1 = constant_curvature_tensor(g);
  const JacobiFamily total = totalize(jacobi_family_of(r1));
  EXPECT_EQ(total.domain(), FamilyDomain::total);
  NullSampler nulls(g, 2);
  for (int i = 0; i < 10; ++i) {
    const Vector n = nulls.next();
    EXPECT_EQ(total(n), testkit::oracle_jacobi(r1, n));
  }
  EXPECT_TRUE(total(Vector::zero(4)).is_zero());
}

TEST(Totalize, DefiniteSpaceOnlyAddsZero) {
  const CurvatureTensor t = sample_tensor(3, 0, 12);
  const JacobiFamily k = jacobi_family_of(t);
  const JacobiFamily total = totalize(k);
  SampleRng rng(12);
  for (int i = 0; i < 10; ++i) {
    const Vector x = rng.nonnull_vector(t.space());
    EXPECT_EQ(total(x), k(x));
  }
  EXPECT_TRUE(total(Vector::zero(3)).is_zero());
  EXPECT_THROW(k(Vector::zero(3)), DomainError);
}

TEST(AxiomSuite, Examples) {
  const CurvatureTensor t = sample_tensor(2, 1, 13);
  const AxiomReport good = run_axiom_suite(totalize(jacobi_family_of(t)), 50, 13);
  EXPECT_TRUE(good.all_ok());
  EXPECT_GT(good.checks, 200u);

  const JacobiFamily eps = JacobiFamily::epsilon_identity(ScalarProduct::euclidean(3));
  const AxiomReport bad = run_axiom_suite(eps, 32, 0);
  EXPECT_TRUE(bad.compatible_ok);
  EXPECT_TRUE(bad.self_adjoint_ok);
  EXPECT_FALSE(bad.annihilation_ok);
  ASSERT_EQ(bad.first_failure(), Axiom::annihilation);
  for (const auto& w : bad.witnesses) EXPECT_TRUE(replay(eps, w));

  EXPECT_TRUE(run_axiom_suite(JacobiFamily::zero(ScalarProduct::diagonal(1, 2)), 32, 0).all_ok());
}

TEST(AxiomSuite, DeterministicPerSeed) {
  const JacobiFamily eps = JacobiFamily::epsilon_identity(ScalarProduct::euclidean(3));
  const AxiomReport a = run_axiom_suite(eps, 32, 4);
  const AxiomReport b = run_axiom_suite(eps, 32, 4);
  ASSERT_EQ(a.witnesses.size(), b.witnesses.size());
  for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
    EXPECT_EQ(a.witnesses[i].vectors, b.witnesses[i].vectors);
  }
  EXPECT_LE(a.witnesses.size(), 5 * kMaxWitnesses);
  EXPECT_GE(a.violations, a.witnesses.size());
}

TEST(TableFamily, VerificationOnly) {
  const ScalarProduct g = ScalarProduct::euclidean(2);
  const CurvatureTensor r1 = constant_curvature_tensor(g);
  std::vector<std::pair<Vector, Endomorphism>> entries;
  for (const auto& x : {Vector{1, 0}, Vector{0, 1}, Vector{1, 1}, Vector{2, 0}}) {
    entries.emplace_back(x, jacobi_operator(r1, x));
  }
  const JacobiFamily table = JacobiFamily::table(g, entries);
  EXPECT_FALSE(table.closed_form());
  EXPECT_TRUE(run_axiom_suite(table, 32, 0).all_ok());
  EXPECT_THROW(table(Vector{3, 1}), DomainError);
  EXPECT_THROW(totalize(table), PreconditionError);
  EXPECT_THROW(reconstruct(table), PreconditionError);

  entries[0].second = Matrix::identity(2);
  EXPECT_FALSE(run_axiom_suite(JacobiFamily::table(g, entries), 32, 0).annihilation_ok);
}

}  // namespace
}  // namespace curvforge
