#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "curvforge/error.hpp"
#include "curvforge/jacobi_family.hpp"
#include "curvforge/linalg.hpp"
#include "curvforge/scalar_product.hpp"

namespace curvforge {

/// Dense rank-4 covariant tensor R[i][j][k][l] = R(e_i, e_j, e_k, e_l).
///
/// Immutable. The symmetry verifier runs at construction, so verified()
/// reflects an exact check of every identity over all index quadruples.
class CurvatureTensor {
 public:
  /// Throws InputError unless components.size() == dim⁴.
  CurvatureTensor(ScalarProduct space, std::vector<Rational> components);

  static CurvatureTensor zero(const ScalarProduct& g);

  const ScalarProduct& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return components_[((i * dim() + j) * dim() + k) * dim() + l];
  }
  const std::vector<Rational>& components() const { return components_; }
  bool verified() const { return verified_; }

  friend bool operator==(const CurvatureTensor& a, const CurvatureTensor& b) {
    return a.space_ == b.space_ && a.components_ == b.components_;
  }

 private:
  ScalarProduct space_;
  std::vector<Rational> components_;
  bool verified_ = false;
};

enum class Symmetry {
  /// R(X,Y,Z,W) = −R(Y,X,Z,W)
  antisymmetry_first_pair,
  /// R(X,Y,Z,W) = −R(X,Y,W,Z)
  antisymmetry_second_pair,
  /// R(X,Y,Z,W) + R(Y,Z,X,W) + R(Z,X,Y,W) = 0
  first_bianchi,
  /// R(X,Y,Z,W) = R(Z,W,X,Y)
  pair_exchange,
};

std::string_view to_string(Symmetry s);

struct SymmetryViolation {
  Symmetry identity;
  std::array<std::size_t, 4> indices;
  Rational residual;
};

inline constexpr std::size_t kMaxSymmetryViolations = 16;

struct SymmetryReport {
  bool antisymmetry_first_pair_ok = true;
  bool antisymmetry_second_pair_ok = true;
  bool first_bianchi_ok = true;
  bool pair_exchange_ok = true;
  /// Total number of violated (identity, quadruple) instances.
  std::size_t violation_count = 0;
  /// The first kMaxSymmetryViolations in scan order.
  std::vector<SymmetryViolation> violations;

  bool verified() const {
    return antisymmetry_first_pair_ok && antisymmetry_second_pair_ok && first_bianchi_ok &&
           pair_exchange_ok;
  }
};

/// Exact scan of all four identities over every index quadruple.
SymmetryReport verify_symmetries(const CurvatureTensor& r);

/// R(X, Y, Z, W) by multilinear extension.
Rational contract(const CurvatureTensor& r, const Vector& x, const Vector& y, const Vector& z,
                  const Vector& w);

/// The Jacobi operator J_X Y = R(Y, X)X, i.e. the endomorphism M with
/// g(M·Y, W) = R(Y, X, X, W). Defined for every X, null and zero included.
Endomorphism jacobi_operator(const CurvatureTensor& r, const Vector& x);

/// X ↦ J_X. Nonnull-only by default, matching the data a reconstruction
/// starts from; pass FamilyDomain::total for the tensor's own extension.
JacobiFamily jacobi_family_of(const CurvatureTensor& r,
                              FamilyDomain domain = FamilyDomain::nonnull_only);

/// R^φ(X,Y,Z,W) = φ(Y,Z)φ(X,W) − φ(X,Z)φ(Y,W) for a symmetric bilinear form
/// φ given by its Gram matrix. φ = g gives the constant curvature tensor R¹.
CurvatureTensor form_tensor(const ScalarProduct& g, const Matrix& phi);

/// R¹(X,Y,Z,W) = g(Y,Z)g(X,W) − g(X,Z)g(Y,W)
CurvatureTensor constant_curvature_tensor(const ScalarProduct& g);

/// Σ c_a·R_a. Every tensor must live on g (StructureError otherwise); an
/// empty list gives the zero tensor.
CurvatureTensor linear_combination(const ScalarProduct& g,
                                   std::span<const std::pair<Rational, CurvatureTensor>> terms);

/// Raised when a family fails a hypothesis required for reconstruction.
class AxiomRejection : public Error {
 public:
  AxiomRejection(Axiom axiom, AxiomReport report);
  Axiom axiom() const { return axiom_; }
  const AxiomReport& report() const { return report_; }

 private:
  Axiom axiom_;
  AxiomReport report_;
};

struct ReconstructOptions {
  /// Off only for demonstrating why the hypotheses are needed.
  bool enforce_axioms = true;
  std::size_t sample_budget = 32;
  std::uint64_t seed = 0;
};

/// Builds R from a total family by
///   3R(X,Y,Z,W) = g((K_{Y+Z} − K_Y − K_Z)W − (K_{Y+W} − K_Y − K_W)Z, X)
/// on basis quadruples. With enforce_axioms the family must first pass
/// run_axiom_suite (AxiomRejection names the failing hypothesis), and the
/// output's Jacobi operators are compared against K on the same samples
/// (StructureError on mismatch).
CurvatureTensor reconstruct(const JacobiFamily& k, const ReconstructOptions& options = {});

/// Sample vectors at which jacobi_operator(r, X) ≠ K_X.
std::vector<Vector> jacobi_mismatches(const CurvatureTensor& r, const JacobiFamily& k,
                                      const std::vector<Vector>& samples);

/// 3R(X,Y,Z,W) evaluated directly from K with the reconstruction formula.
Rational reconstruction_value(const JacobiFamily& k, const Vector& x, const Vector& y,
                              const Vector& z, const Vector& w);

/// 6R(X,Y,Z,W) as the mixed derivative ∂²/∂s∂t at 0 of
/// μ(X+sW, Y+tZ) − μ(X+sZ, Y+tW). The difference is at most quadratic in
/// each of s and t, so the central difference on {−1, 0, 1}² is exact.
/// Throws AxiomRejection if μ is found asymmetric at a grid point.
Rational mu_form_value(const JacobiFamily& k, const Vector& x, const Vector& y, const Vector& z,
                       const Vector& w);

struct Quadruple {
  Vector x, y, z, w;
};

struct EquivalenceReport {
  bool agree = true;
  std::size_t checked = 0;
  std::vector<Quadruple> mismatches;
};

/// Checks mu_form_value == 2·reconstruction_value on every quadruple.
EquivalenceReport verify_mu_form_equivalence(const JacobiFamily& k,
                                             const std::vector<Quadruple>& quadruples);

}  // namespace curvforge
