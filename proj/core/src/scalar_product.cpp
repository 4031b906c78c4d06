#include "curvforge/scalar_product.hpp"

#include <functional>
#include <string>

#include "curvforge/error.hpp"

namespace curvforge {

namespace {

bool is_square_rational(const Rational& r) {
  if (r < 0) return false;
  return mpz_perfect_square_p(r.get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(r.get_den_mpz_t()) != 0;
}

Rational rational_sqrt(const Rational& r) {
  Integer num, den;
  mpz_sqrt(num.get_mpz_t(), r.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), r.get_den_mpz_t());
  Rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace

ScalarProduct::ScalarProduct(Matrix metric) {
  if (!metric.is_square() || metric.rows() == 0) {
    throw InputError("metric must be a nonempty square matrix");
  }
  if (!metric.is_symmetric()) throw InputError("metric must be symmetric");
  const std::size_t n = metric.rows();

  // Congruence reduction: P accumulates the basis change, A = Pᵀ G P.
  Matrix a = metric;
  Matrix p = Matrix::identity(n);
  auto add_to = [&](std::size_t target, std::size_t source, const Rational& f) {
    // e_target += f · e_source, applied congruently.
    for (std::size_t j = 0; j < n; ++j) a(target, j) += f * a(source, j);
    for (std::size_t i = 0; i < n; ++i) a(i, target) += f * a(i, source);
    for (std::size_t i = 0; i < n; ++i) p(i, target) += f * p(i, source);
  };
  auto swap_basis = [&](std::size_t s, std::size_t t) {
    if (s == t) return;
    for (std::size_t j = 0; j < n; ++j) std::swap(a(s, j), a(t, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(a(i, s), a(i, t));
    for (std::size_t i = 0; i < n; ++i) std::swap(p(i, s), p(i, t));
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, pivot) == 0) ++pivot;
    if (pivot == n) {
      // All remaining diagonal entries vanish: e_i + e_j has norm 2·a_ij.
      bool fixed = false;
      for (std::size_t i = k; i < n && !fixed; ++i) {
        for (std::size_t j = i + 1; j < n && !fixed; ++j) {
          if (a(i, j) != 0) {
            add_to(i, j, 1);
            pivot = i;
            fixed = true;
          }
        }
      }
      if (!fixed) throw PreconditionError("metric is degenerate");
    }
    swap_basis(k, pivot);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      add_to(i, k, -a(i, k) / a(k, k));
    }
  }

  auto data = std::make_shared<Data>();
  data->metric = std::move(metric);
  data->inverse = inverse(data->metric);
  for (std::size_t k = 0; k < n; ++k) {
    data->orthogonal_basis.push_back(p.column(k));
    data->orthogonal_norms.push_back(a(k, k));
    if (a(k, k) > 0) {
      ++data->signature.positive;
    } else {
      ++data->signature.negative;
    }
  }
  data_ = std::move(data);
}

ScalarProduct ScalarProduct::euclidean(std::size_t n) { return diagonal(n, 0); }

ScalarProduct ScalarProduct::diagonal(std::size_t p, std::size_t q) {
  std::vector<Rational> d(p + q, Rational(1));
  for (std::size_t i = p; i < p + q; ++i) d[i] = -1;
  return ScalarProduct(Matrix::diagonal(d));
}

void require_dim(const ScalarProduct& g, const Vector& x) {
  if (x.size() != g.dim()) {
    throw InputError("vector has dimension " + std::to_string(x.size()) +
                     ", scalar product has dimension " + std::to_string(g.dim()));
  }
}

void require_dim(const ScalarProduct& g, const Matrix& a) {
  if (a.rows() != g.dim() || a.cols() != g.dim()) {
    throw InputError("endomorphism shape does not match scalar product dimension " +
                     std::to_string(g.dim()));
  }
}

Vector ScalarProduct::lower(const Vector& x) const {
  require_dim(*this, x);
  return metric() * x;
}

Rational ScalarProduct::inner(const Vector& x, const Vector& y) const {
  require_dim(*this, y);
  return dot(lower(x), y);
}

Rational ScalarProduct::squared_norm(const Vector& x) const { return inner(x, x); }

VectorKind ScalarProduct::classify(const Vector& x) const {
  require_dim(*this, x);
  if (x.is_zero()) return VectorKind::zero;
  return squared_norm(x) == 0 ? VectorKind::null : VectorKind::nonnull;
}

Rational squared_norm(const ScalarProduct& g, const Vector& x) { return g.squared_norm(x); }

VectorKind classify_vector(const ScalarProduct& g, const Vector& x) { return g.classify(x); }

bool is_self_adjoint(const ScalarProduct& g, const Endomorphism& a) {
  require_dim(g, a);
  return g.metric() * a == a.transpose() * g.metric();
}

bool is_skew_adjoint(const ScalarProduct& g, const Endomorphism& a) {
  require_dim(g, a);
  return g.metric() * a == Rational(-1) * (a.transpose() * g.metric());
}

std::vector<Vector> orthogonal_complement_basis(const ScalarProduct& g, const Vector& x) {
  const VectorKind kind = g.classify(x);
  if (kind == VectorKind::zero) throw PreconditionError("orthogonal complement of the zero vector");
  if (kind == VectorKind::null) {
    throw PreconditionError("orthogonal complement of a null vector is degenerate");
  }
  const Vector w = g.lower(x);
  const std::size_t n = g.dim();
  std::size_t pivot = 0;
  while (w[pivot] == 0) ++pivot;
  std::vector<Vector> basis;
  basis.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == pivot) continue;
    Vector b = Vector::basis(n, i);
    b[pivot] = -w[i] / w[pivot];
    basis.push_back(primitive(b));
  }
  return basis;
}

std::optional<Vector> find_null_vector(const ScalarProduct& g) {
  if (g.is_definite()) return std::nullopt;
  const auto& basis = g.orthogonal_basis();
  const auto& norms = g.orthogonal_norms();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (norms[i] <= 0 || norms[j] >= 0) continue;
      // a·α² = b·β² with a = ε_i, b = −ε_j; take β = 1.
      const Rational ratio = -norms[j] / norms[i];
      if (!is_square_rational(ratio)) continue;
      return primitive(rational_sqrt(ratio) * basis[i] + basis[j]);
    }
  }
  const std::size_t n = g.dim();
  const int bound = n <= 6 ? 3 : 2;
  std::vector<Rational> coords(n);
  std::optional<Vector> found;
  std::function<void(std::size_t)> search = [&](std::size_t pos) {
    if (found) return;
    if (pos == n) {
      Vector v(coords);
      if (!v.is_zero() && g.squared_norm(v) == 0) found = primitive(v);
      return;
    }
    for (int c = -bound; c <= bound && !found; ++c) {
      coords[pos] = c;
      search(pos + 1);
    }
  };
  search(0);
  return found;
}

}  // namespace curvforge
