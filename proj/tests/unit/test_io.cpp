#include <gtest/gtest.h>

#include "curvforge/error.hpp"
#include "curvforge/io.hpp"
#include "testkit.hpp"

namespace curvforge {
namespace {

using io::Json;

const std::string kData = CURVFORGE_TEST_DATA;

TEST(Io, RationalsAsStrings) {
  EXPECT_EQ(io::to_json(make_rational(3, 1)), Json("3"));
  EXPECT_EQ(io::to_json(make_rational(-2, 4)), Json("-1/2"));
  EXPECT_EQ(io::rational_from_json(Json("6/4")), make_rational(3, 2));
  EXPECT_EQ(io::rational_from_json(Json(-7)), Rational(-7));
  EXPECT_THROW(io::rational_from_json(Json(0.5)), InputError);
}

TEST(Io, MatricesRoundTrip) {
  const Matrix m{{1, make_rational(1, 3)}, {0, -2}};
  EXPECT_EQ(io::matrix_from_json(io::to_json(m)), m);
  EXPECT_THROW(io::matrix_from_json(io::parse("[[\"1\"], [\"1\", \"2\"]]")), InputError);
}

TEST(Io, SpaceFromAnyDescription) {
  EXPECT_EQ(io::space_from_json(io::parse(R"({"dim": 3})")), ScalarProduct::euclidean(3));
  EXPECT_EQ(io::space_from_json(io::parse(R"({"signature": [1, 2]})")), ScalarProduct::diagonal(1, 2));
  EXPECT_EQ(io::space_from_json(io::parse(R"({"metric": [["0","1"],["1","0"]]})")).signature().negative,
            1u);
  EXPECT_THROW(io::space_from_json(io::parse(R"({"metric": [["1","0"],["0","1"]], "dim": 3})")),
               InputError);
}

TEST(Io, TensorRoundTrip) {
  const CurvatureTensor r = testkit::random_act({4, 2, 2, 3, 2, 5});
  EXPECT_EQ(io::tensor_from_json(io::parse(io::dump(io::to_json(r)))), r);
}

TEST(Io, SparseTensorInput) {
  const Json doc = io::parse(R"({"dim": 2, "entries": [
      {"i": 0, "j": 1, "k": 1, "l": 0, "v": "1"}, {"i": 1, "j": 0, "k": 0, "l": 1, "v": "1"},
      {"i": 0, "j": 1, "k": 0, "l": 1, "v": "-1"}, {"i": 1, "j": 0, "k": 1, "l": 0, "v": "-1"}]})");
  EXPECT_EQ(io::tensor_from_json(doc), constant_curvature_tensor(ScalarProduct::euclidean(2)));
  EXPECT_THROW(io::tensor_from_json(io::parse(R"({"dim": 2, "entries": [{"i": 0, "j": 2, "k": 0, "l": 0, "v": "1"}]})")),
               InputError);
}

TEST(Io, FixtureIsConstantCurvature) {
  EXPECT_EQ(io::tensor_from_json(io::read_file(kData + "/r1_dim3.json")),
            constant_curvature_tensor(ScalarProduct::euclidean(3)));
}

TEST(Io, MalformedJsonReportsPosition) {
  try {
    io::read_file(kData + "/malformed.json");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("byte"), std::string::npos);
  }
  EXPECT_THROW(io::read_file(kData + "/no_such_file.json"), InputError);
}

TEST(Io, CliffordSpecRoundTrip) {
  const CliffordSpec spec = testkit::random_clifford_spec(4, true, 2);
  const CliffordSpec back = io::clifford_spec_from_json(io::to_json(spec));
  EXPECT_EQ(back.coefficients, spec.coefficients);
  ASSERT_EQ(back.structures.size(), spec.structures.size());
  for (std::size_t i = 0; i < spec.structures.size(); ++i) {
    EXPECT_EQ(back.structures[i].matrix, spec.structures[i].matrix);
    EXPECT_EQ(back.structures[i].kind, spec.structures[i].kind);
  }
}

TEST(Io, FamilyDescriptors) {
  EXPECT_EQ(io::family_from_json(io::read_file(kData + "/family_zero.json")).provenance(),
            Provenance::from_tensor);
  const JacobiFamily eps = io::family_from_json(io::read_file(kData + "/family_epsilon_id.json"));
  EXPECT_EQ(eps.provenance(), Provenance::counterexample);
  EXPECT_EQ(eps(Vector{1, 0, 0}), Matrix::identity(3));
  const JacobiFamily table = io::family_from_json(io::read_file(kData + "/family_table.json"));
  EXPECT_FALSE(table.closed_form());

  Json clifford = io::read_file(kData + "/clifford_kahler.json");
  clifford["kind"] = "clifford";
  EXPECT_EQ(io::family_from_json(clifford).provenance(), Provenance::clifford);

  const Json from_tensor{{"kind", "from_tensor"},
                         {"domain", "total"},
                         {"tensor", io::read_file(kData + "/r1_dim3.json")}};
  EXPECT_EQ(io::family_from_json(from_tensor).domain(), FamilyDomain::total);

  const Json substituted{{"kind", "eigen_substitution"},
                         {"tensor", io::read_file(kData + "/tensor_kahler.json")},
                         {"mu", {"1", "2"}}};
  EXPECT_EQ(io::family_from_json(substituted).provenance(), Provenance::eigen_substitution);

  EXPECT_THROW(io::family_from_json(io::parse(R"({"kind": "mystery", "dim": 2})")), InputError);
  EXPECT_THROW(io::family_from_json(io::parse(R"({"dim": 2})")), InputError);
}

TEST(Io, ReportsAreDeterministic) {
  const JacobiFamily eps = JacobiFamily::epsilon_identity(ScalarProduct::euclidean(3));
  EXPECT_EQ(io::dump(io::to_json(run_axiom_suite(eps, 16, 1))),
            io::dump(io::to_json(run_axiom_suite(eps, 16, 1))));
  const Json verdict = io::to_json(is_osserman(constant_curvature_tensor(ScalarProduct::euclidean(3))));
  EXPECT_EQ(verdict["reference_char_poly"]["text"], "x^3 - 2*x^2 + x");
  EXPECT_EQ(verdict["counterexample"], nullptr);
}

}  // namespace
}  // namespace curvforge
