#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "curvforge/curvature.hpp"
#include "curvforge/jacobi_family.hpp"
#include "curvforge/polynomial.hpp"

namespace curvforge {

/// J̃_X: the Jacobi operator restricted to X^⊥, written in the basis returned
/// by orthogonal_complement_basis(g, X). X must be nonnull.
Endomorphism reduced_jacobi(const CurvatureTensor& r, const Vector& x);

/// det(λ·id − J_X/ε_X) on the whole space (degree n).
Polynomial normalized_char_poly(const CurvatureTensor& r, const Vector& x);

/// det(λ·id − J̃_X/ε_X) on X^⊥ (degree n−1).
Polynomial reduced_char_poly(const CurvatureTensor& r, const Vector& x);

struct OssermanVerdict {
  bool is_osserman = false;
  Polynomial reference_char_poly;
  /// Distinct roots (complex ones included) of the reduced normalized
  /// characteristic polynomial, when the same for every sample.
  std::optional<int> k_root;
  bool diagonalizable = false;
  std::size_t samples_used = 0;
  std::uint64_t seed = 0;
  /// Sample whose normalized characteristic polynomial differs from the
  /// reference (the first sample's).
  std::optional<std::pair<Vector, Polynomial>> counterexample;
};

/// Sampling certificate: exact agreement of det(λ·id − J_X/ε_X) over
/// `samples` nonnull X (the nonnull basis vectors, then seeded random
/// vectors). Not a proof. samples < 2 is a PreconditionError.
OssermanVerdict is_osserman(const CurvatureTensor& r, std::size_t samples = 32,
                            std::uint64_t seed = 0);

struct SpectralOptions {
  /// Absolute gap used to cluster floating-point eigenvalues.
  double tol = 1e-9;
  /// Refuse (UnsupportedError) instead of falling back to floating point.
  bool exact_only = false;
};

/// One eigenspace V_i(X) = ker(J̃_X − ε_X·λ_i) ⊂ X^⊥, λ_i normalized.
struct Eigenspace {
  /// Set in exact mode.
  std::optional<Rational> value;
  double approx_value = 0.0;
  double approx_imag = 0.0;
  /// Algebraic multiplicity ν_i.
  int multiplicity = 0;
  /// Exact basis (vectors of V) in exact mode.
  std::vector<Vector> basis;
  /// Floating-point basis in approximate mode (real eigenvalues only).
  std::vector<std::vector<double>> approx_basis;
  /// dim V_i == ν_i
  bool semisimple = false;
  /// g restricted to V_i is nondegenerate.
  bool nondegenerate = false;
};

struct SpectralDecomposition {
  Vector base_vector;
  Rational epsilon;
  /// Every eigenvalue rational; all data exact.
  bool exact = false;
  /// Ascending λ_1 < … < λ_k (by real part, then imaginary part).
  std::vector<Eigenspace> eigenspaces;

  std::size_t k() const { return eigenspaces.size(); }
  /// V_0(X) = span{X}, λ_0 = 0.
  std::vector<Vector> kernel_space() const { return {base_vector}; }
  /// Real eigenvalues, each eigenspace complete and g-nondegenerate, which
  /// together give a g-orthonormal eigenbasis of X^⊥.
  bool diagonalizable() const;
  std::vector<Rational> exact_values() const;
};

SpectralDecomposition spectral_decomposition(const CurvatureTensor& r, const Vector& x,
                                             const SpectralOptions& options = {});

struct DiagonalizabilityReport {
  bool diagonalizable = true;
  std::size_t samples_used = 0;
  /// Sampled X at which J̃_X has no g-orthonormal eigenbasis.
  std::vector<Vector> witnesses;
};

/// Per-X test: the minimal polynomial of J̃_X is squarefree with only real
/// roots, and every eigenspace is g-nondegenerate.
bool jacobi_diagonalizable_at(const CurvatureTensor& r, const Vector& x,
                              const SpectralOptions& options = {});

DiagonalizabilityReport is_jacobi_diagonalizable(const CurvatureTensor& r,
                                                 std::size_t samples = 32,
                                                 std::uint64_t seed = 0,
                                                 const SpectralOptions& options = {});

/// g-orthogonal projection onto X^⊥: id − X·(GX)ᵀ/ε_X.
Endomorphism complement_projector(const ScalarProduct& g, const Vector& x);

/// Lagrange spectral projectors onto V_1(X)..V_k(X) for the given normalized
/// eigenvalues:
///   P_i = Q · Π_{j≠i} (J_X − ε_X λ_j) / (ε_X (λ_i − λ_j)),
/// Q the complement projector. Valid when J̃_X is diagonalizable with exactly
/// these eigenvalues.
std::vector<Endomorphism> spectral_projectors(const CurvatureTensor& r, const Vector& x,
                                              const std::vector<Rational>& eigenvalues);

struct ProportionalityWitness {
  Vector x;
  Vector y;
  /// Component index: 0 is span{X} / span{Y}, i ≥ 1 is λ_i.
  std::size_t index;
  /// ε_X·ε_{Y_i} and ε_Y·ε_{X_i}
  double lhs_approx;
  double rhs_approx;
  std::optional<Rational> lhs;
  std::optional<Rational> rhs;
};

struct ProportionalityReport {
  bool holds = true;
  bool exact = true;
  std::size_t pairs_checked = 0;
  std::vector<ProportionalityWitness> witnesses;
};

/// For each (X, Y): decomposes Y along V_i(X) and X along V_i(Y), matching
/// eigenspaces by eigenvalue, and checks ε_X·ε_{Y_i} = ε_Y·ε_{X_i} for
/// i = 0..k. Exact with rational spectra, within tol otherwise.
/// StructureError if the two spectra differ; PreconditionError if either
/// operator is not diagonalizable or a vector is null.
ProportionalityReport check_proportionality(const CurvatureTensor& r,
                                            const std::vector<std::pair<Vector, Vector>>& pairs,
                                            const SpectralOptions& options = {});

/// Deterministic pairs of nonnull sample vectors.
std::vector<std::pair<Vector, Vector>> sample_pairs(const ScalarProduct& g, std::size_t count,
                                                    std::uint64_t seed);

enum class StructureKind { complex, product };

struct CliffordStructure {
  Endomorphism matrix;
  StructureKind kind = StructureKind::complex;
};

/// R = μ_0·R¹ + Σ_{i≥1} μ_i·R^{J_i}. coefficients holds μ_0..μ_m, so it has
/// one more entry than structures.
struct CliffordSpec {
  ScalarProduct space;
  std::vector<Rational> coefficients;
  std::vector<CliffordStructure> structures;
};

/// Throws StructureError naming the first violated condition: coefficient
/// count, skew-adjointness, J² = ∓id, pairwise anticommutation, or a product
/// structure on a non-neutral signature.
void validate(const CliffordSpec& spec);

/// R^J(X,Y,Z,W) = g(JX,Z)g(JY,W) − g(JY,Z)g(JX,W) + 2g(JX,Y)g(JZ,W)
CurvatureTensor structure_tensor(const ScalarProduct& g, const Endomorphism& j);

CurvatureTensor build_clifford(const CliffordSpec& spec);

/// Closed-form Jacobi family of build_clifford(spec), total:
///   K_X Y = μ_0(ε_X Y − g(X,Y)X) − 3Σ μ_i g(Y, J_i X) J_i X.
JacobiFamily clifford_family(const CliffordSpec& spec);

struct SubstitutionOptions {
  std::size_t samples = 32;
  std::uint64_t seed = 0;
};

/// Keeps the eigenspaces of an Osserman, Jacobi-diagonalizable,
/// Jacobi-proportional R and replaces its normalized eigenvalues
/// λ_1 < … < λ_k by new_eigenvalues μ_1..μ_k (same order):
///   K_X = ε_X Σ μ_i P_i(X),  K_X X = 0.
/// Hypotheses are checked on samples: PreconditionError names the one that
/// fails; UnsupportedError for an irrational spectrum. Evaluating the family
/// at an X where J_X does not have the sampled spectrum is a DomainError.
JacobiFamily eigen_substitute(const CurvatureTensor& r, const std::vector<Rational>& new_eigenvalues,
                              const SubstitutionOptions& options = {});

/// Sampled corroboration that a two-root diagonalizable Osserman tensor is
/// Jacobi-proportional. nullopt (skipped) when the tensor is not two-root,
/// diagonalizable and Osserman on the samples.
std::optional<bool> sample_two_root_proportionality(const CurvatureTensor& r,
                                                    std::size_t pairs = 20,
                                                    std::uint64_t seed = 0);

}  // namespace curvforge
