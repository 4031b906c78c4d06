#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "curvforge/curvature.hpp"
#include "curvforge/osserman.hpp"
#include "curvforge/sampling.hpp"

namespace curvforge::testkit {

struct GeneratorConfig {
  std::size_t dim = 3;
  std::size_t p = 3;
  std::size_t q = 0;
  std::uint64_t seed = 0;
  std::size_t num_forms = 2;
  /// Random form entries are a/b with |a| ≤ coefficient_bound, b ∈ {1, 2}.
  std::int64_t coefficient_bound = 5;
};

/// InputError unless p + q == dim and coefficient_bound ≥ 0.
void validate(const GeneratorConfig& cfg);
nlohmann::json to_json(const GeneratorConfig& cfg);
GeneratorConfig config_from_json(const nlohmann::json& doc);

/// diag(+1 × p, −1 × q)
ScalarProduct space_of(const GeneratorConfig& cfg);

Matrix random_symmetric(SampleRng& rng, std::size_t n, std::int64_t bound);

/// Σ_a R^{φ_a} over cfg.num_forms random symmetric φ_a.
CurvatureTensor random_act(const GeneratorConfig& cfg);
CurvatureTensor act_from_forms(const ScalarProduct& g, const std::vector<Matrix>& forms);
JacobiFamily random_family(const GeneratorConfig& cfg);

/// Σ R[i][j][k][l]·X_i·Y_j·Z_k·W_l by a plain quadruple loop. Does not look
/// at the verified flag. InputError on a shape mismatch.
Rational oracle_contract(const CurvatureTensor& r, const Vector& x, const Vector& y,
                         const Vector& z, const Vector& w);

/// J_X assembled entry by entry from oracle_contract and G⁻¹.
Endomorphism oracle_jacobi(const CurvatureTensor& r, const Vector& x);

/// Random valid Clifford data on diag(1,1,1,1), diag(1,1,−1,−1) (neutral),
/// diag(1 × 6) or diag(1,1,1,−1,−1,−1) (neutral). Standard structures are
/// conjugated by a random Cayley isometry and paired with random μ.
/// dim must be 4 or 6.
CliffordSpec random_clifford_spec(std::size_t dim, bool neutral, std::uint64_t seed);

/// Searches φ with entries a/b, |a| ≤ 1, b ∈ {1, 2}, on diag(1,1,−1) until the reduced
/// Jacobi operator of R^φ at e₁ is nonzero and nilpotent.
std::optional<Matrix> find_nilpotent_form(std::uint64_t seed, std::size_t attempts = 4096);

}  // namespace curvforge::testkit
