#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "curvforge/linalg.hpp"
#include "curvforge/scalar_product.hpp"

namespace curvforge {

enum class FamilyDomain { total, nonnull_only };

enum class Provenance { from_tensor, clifford, eigen_substitution, user_table, counterexample };

std::string_view to_string(FamilyDomain domain);
std::string_view to_string(Provenance provenance);

/// A family X ↦ K_X of endomorphisms indexed by vectors.
///
/// The evaluator must be a pure function of X. A nonnull-only family throws
/// DomainError when asked for K_X at a null or zero X; use totalize() to
/// extend it. Families built from explicit lookup tables are not closed form
/// and cannot be totalized or reconstructed.
class JacobiFamily {
 public:
  using Evaluator = std::function<Endomorphism(const Vector&)>;

  JacobiFamily(ScalarProduct space, FamilyDomain domain, Provenance provenance,
               Evaluator evaluate, bool closed_form = true);

  /// K ≡ 0, total.
  static JacobiFamily zero(const ScalarProduct& g);
  /// K_X = ε_X·id on nonnull X: self-adjoint and compatible, but K_X X ≠ 0.
  static JacobiFamily epsilon_identity(const ScalarProduct& g);
  /// Explicit (X, K_X) pairs. Evaluation elsewhere is a DomainError.
  static JacobiFamily table(const ScalarProduct& g,
                            std::vector<std::pair<Vector, Endomorphism>> entries);

  const ScalarProduct& space() const { return space_; }
  FamilyDomain domain() const { return domain_; }
  Provenance provenance() const { return provenance_; }
  bool closed_form() const { return closed_form_; }
  /// The vectors a table family knows; empty for closed-form families.
  const std::vector<Vector>& table_points() const { return table_points_; }

  bool contains(const Vector& x) const;
  Endomorphism operator()(const Vector& x) const;

 private:
  ScalarProduct space_;
  FamilyDomain domain_;
  Provenance provenance_;
  Evaluator evaluate_;
  bool closed_form_;
  std::vector<Vector> table_points_;
};

enum class Axiom { self_adjoint, compatibility, annihilation, homogeneity, cocycle };

std::string_view to_string(Axiom axiom);
/// The identity each axiom asserts, e.g. "K_X X = 0".
std::string_view identity_of(Axiom axiom);

/// One violated instance. `vectors` holds the arguments in order (X) or
/// (X, Y); homogeneity additionally records the scale t.
struct Witness {
  Axiom axiom;
  std::vector<Vector> vectors;
  std::optional<Rational> scale;
  std::variant<Rational, Vector, Matrix> residual;
};

inline constexpr std::size_t kMaxWitnesses = 16;

/// Aggregated result of axiom checks. Flags of checks that were not run stay
/// true. Every false flag carries at least one witness; witnesses are sorted
/// canonically and truncated at kMaxWitnesses per axiom, while `violations`
/// keeps the full count.
struct AxiomReport {
  bool self_adjoint_ok = true;
  bool compatible_ok = true;
  bool annihilation_ok = true;
  bool homogeneity_ok = true;
  bool cocycle_ok = true;
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::vector<Witness> witnesses;

  bool all_ok() const;
  bool ok(Axiom axiom) const;
  /// First failing hypothesis in the order self-adjoint, compatibility,
  /// annihilation, then the derived identities homogeneity and cocycle.
  std::optional<Axiom> first_failure() const;
  void merge(const AxiomReport& other);
};

/// Re-evaluates a witness against K; true if the violation reproduces.
bool replay(const JacobiFamily& k, const Witness& w);

AxiomReport check_self_adjoint(const JacobiFamily& k, const std::vector<Vector>& samples);
/// g(K_X Y, Y) = g(K_Y X, X)
AxiomReport check_compatibility(const JacobiFamily& k,
                                const std::vector<std::pair<Vector, Vector>>& pairs);
/// K_X X = 0
AxiomReport check_annihilation(const JacobiFamily& k, const std::vector<Vector>& samples);
/// K_{tX} = t²·K_X; t = 0 is a PreconditionError.
AxiomReport check_homogeneity(const JacobiFamily& k,
                              const std::vector<std::pair<Vector, Rational>>& samples);
/// K_{X+Y} Y − K_X Y + K_Y X = 0
AxiomReport check_cocycle(const JacobiFamily& k,
                          const std::vector<std::pair<Vector, Vector>>& pairs);

/// μ(X, Y) = g(K_Y X, X).
Rational mu_form(const JacobiFamily& k, const Vector& x, const Vector& y);

/// Deterministic sample vectors for the axiom suite: basis vectors first,
/// then random rationals, then (total families, indefinite g) null vectors
/// and the zero vector. Only vectors inside `domain` are produced.
struct SampleSet {
  std::vector<Vector> vectors;
  std::vector<std::pair<Vector, Vector>> pairs;
  std::vector<std::pair<Vector, Rational>> scaled;
};
SampleSet make_samples(const ScalarProduct& g, FamilyDomain domain, std::size_t budget,
                       std::uint64_t seed);

/// Runs every check over make_samples(budget, seed). Pairs whose sum leaves
/// the domain are skipped for the cocycle check. Deterministic per seed.
/// Table families are checked on their own entries only: every ordered pair
/// of entries, and homogeneity/cocycle wherever tX or X+Y is also an entry.
AxiomReport run_axiom_suite(const JacobiFamily& k, std::size_t sample_budget, std::uint64_t seed);

enum class NullExtensionMode {
  fast,
  /// Recompute with a second admissible direction and require exact agreement.
  verify,
};

/// Candidate directions X for extending K to a null N, in search order:
/// t·e_i for i = 1..n and t = 1, 2, …, then t·b_i over the g-orthogonal
/// basis (which always succeeds). X is admissible when ε_X·ε_{N+X}·ε_{N−X} ≠ 0.
/// Returns the first `count` admissible directions.
std::vector<Vector> admissible_directions(const ScalarProduct& g, const Vector& null_vector,
                                          std::size_t count);

/// K_N = (K_{N+X} + K_{N−X} − 2K_X) / 2 for an explicit admissible X.
Endomorphism extend_to_null_via(const JacobiFamily& k, const Vector& null_vector,
                                const Vector& direction);

/// K_N via the first admissible direction. In verify mode the second
/// admissible direction must give the identical matrix, else InternalError.
Endomorphism extend_to_null(const JacobiFamily& k, const Vector& null_vector,
                            NullExtensionMode mode = NullExtensionMode::verify);

/// Extends a nonnull-only family by K_0 = 0 and K_N = extend_to_null(N).
/// Total families are returned unchanged.
JacobiFamily totalize(const JacobiFamily& k, NullExtensionMode mode = NullExtensionMode::verify);

}  // namespace curvforge
