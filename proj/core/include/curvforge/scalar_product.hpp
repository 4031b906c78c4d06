#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "curvforge/linalg.hpp"

namespace curvforge {

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

enum class VectorKind { zero, null, nonnull };

/// A symmetric nondegenerate rational bilinear form g on Qⁿ.
///
/// Construction performs an exact symmetric (congruence) reduction of the
/// Gram matrix, which yields the signature, a g-orthogonal basis, and the
/// inverse used for raising indices. The object is immutable and cheap to
/// copy; the derived data is shared.
class ScalarProduct {
 public:
  /// Throws InputError if the metric is not square and symmetric and
  /// PreconditionError if it is degenerate.
  explicit ScalarProduct(Matrix metric);

  static ScalarProduct euclidean(std::size_t n);
  /// diag(+1 × p, −1 × q)
  static ScalarProduct diagonal(std::size_t p, std::size_t q);

  std::size_t dim() const { return data_->metric.rows(); }
  const Matrix& metric() const { return data_->metric; }
  const Matrix& inverse_metric() const { return data_->inverse; }
  Signature signature() const { return data_->signature; }
  bool is_definite() const { return signature().positive == 0 || signature().negative == 0; }
  bool is_neutral() const { return signature().positive == signature().negative; }

  /// Columns form a g-orthogonal basis; ε of column i is orthogonal_norms()[i].
  const std::vector<Vector>& orthogonal_basis() const { return data_->orthogonal_basis; }
  const std::vector<Rational>& orthogonal_norms() const { return data_->orthogonal_norms; }

  Rational inner(const Vector& x, const Vector& y) const;
  /// ε_X = g(X, X)
  Rational squared_norm(const Vector& x) const;
  VectorKind classify(const Vector& x) const;

  /// G·x, the covector g(x, ·).
  Vector lower(const Vector& x) const;

  friend bool operator==(const ScalarProduct& a, const ScalarProduct& b) {
    return a.data_ == b.data_ || a.metric() == b.metric();
  }

 private:
  struct Data {
    Matrix metric;
    Matrix inverse;
    Signature signature;
    std::vector<Vector> orthogonal_basis;
    std::vector<Rational> orthogonal_norms;
  };
  std::shared_ptr<const Data> data_;
};

Rational squared_norm(const ScalarProduct& g, const Vector& x);
VectorKind classify_vector(const ScalarProduct& g, const Vector& x);

/// True iff G·A = Aᵀ·G, i.e. g(AV, W) = g(V, AW) for all V, W.
bool is_self_adjoint(const ScalarProduct& g, const Endomorphism& a);

/// True iff G·A = −Aᵀ·G.
bool is_skew_adjoint(const ScalarProduct& g, const Endomorphism& a);

/// n−1 vectors spanning X^⊥ for a nonnull X. The pivot is the lowest index p
/// with (GX)_p ≠ 0; the basis is e_i − ((GX)_i / (GX)_p)·e_p for i ≠ p, each
/// scaled to a primitive integer vector. Throws PreconditionError for null or
/// zero X.
std::vector<Vector> orthogonal_complement_basis(const ScalarProduct& g, const Vector& x);

/// A rational null vector, if one can be found: first from pairs of
/// orthogonal-basis directions of opposite sign whose norm ratio is a square,
/// then by a bounded search over small integer vectors. Definite forms have
/// none; some indefinite rational forms have none either.
std::optional<Vector> find_null_vector(const ScalarProduct& g);

void require_dim(const ScalarProduct& g, const Vector& x);
void require_dim(const ScalarProduct& g, const Matrix& a);

}  // namespace curvforge
