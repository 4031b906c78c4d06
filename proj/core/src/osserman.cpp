#include "curvforge/osserman.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "curvforge/error.hpp"
#include "curvforge/sampling.hpp"

namespace curvforge {

namespace {

Rational nonnull_norm(const ScalarProduct& g, const Vector& x) {
  switch (g.classify(x)) {
    case VectorKind::zero: throw PreconditionError("expected a nonnull vector, got zero");
    case VectorKind::null: throw PreconditionError("expected a nonnull vector, got a null vector");
    case VectorKind::nonnull: break;
  }
  return g.squared_norm(x);
}

// Nonnull basis vectors first, then seeded random nonnull vectors.
std::vector<Vector> sample_nonnull(const ScalarProduct& g, std::size_t count, std::uint64_t seed) {
  std::vector<Vector> out;
  out.reserve(count);
  for (std::size_t i = 0; i < g.dim() && out.size() < count; ++i) {
    Vector e = Vector::basis(g.dim(), i);
    if (g.classify(e) == VectorKind::nonnull) out.push_back(std::move(e));
  }
  SampleRng rng(seed);
  while (out.size() < count) out.push_back(rng.nonnull_vector(g));
  return out;
}

Eigen::MatrixXd to_eigen(const Matrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  }
  return out;
}

double smallest_singular_value(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues().minCoeff();
}

// Eigendata of the normalized reduced operator N = J̃_X/ε_X in floating point.
void approximate_spectrum(const Matrix& normalized, const Matrix& complement,
                          const ScalarProduct& g, const SpectralOptions& options,
                          SpectralDecomposition& out) {
  const Eigen::MatrixXd n = to_eigen(normalized);
  const Eigen::MatrixXd b = to_eigen(complement);
  const Eigen::MatrixXd gram_metric = to_eigen(g.metric());
  const long dim = n.rows();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(n, false);
  std::vector<std::complex<double>> values(solver.eigenvalues().data(),
                                           solver.eigenvalues().data() + dim);
  std::sort(values.begin(), values.end(), [](auto a, auto c) {
    return a.real() != c.real() ? a.real() < c.real() : a.imag() < c.imag();
  });
  const double scale = std::max(1.0, n.norm());
  const double null_tol = 1e-7 * scale;
  std::size_t start = 0;
  while (start < values.size()) {
    std::size_t end = start + 1;
    while (end < values.size() && std::abs(values[end] - values[end - 1]) <= options.tol * scale) {
      ++end;
    }
    std::complex<double> mean = 0;
    for (std::size_t i = start; i < end; ++i) mean += values[i];
    mean /= static_cast<double>(end - start);

    Eigenspace space;
    space.approx_value = mean.real();
    space.approx_imag = std::abs(mean.imag()) <= options.tol * scale ? 0.0 : mean.imag();
    space.multiplicity = static_cast<int>(end - start);
    if (space.approx_imag == 0.0) {
      const Eigen::MatrixXd shifted = n - space.approx_value * Eigen::MatrixXd::Identity(dim, dim);
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(shifted, Eigen::ComputeFullV);
      const auto& sv = svd.singularValues();
      Eigen::MatrixXd basis_v(b.rows(), 0);
      for (long i = 0; i < sv.size(); ++i) {
        if (sv(i) > null_tol) continue;
        const Eigen::VectorXd v = b * svd.matrixV().col(i);
        space.approx_basis.emplace_back(v.data(), v.data() + v.size());
        basis_v.conservativeResize(Eigen::NoChange, basis_v.cols() + 1);
        basis_v.col(basis_v.cols() - 1) = v;
      }
      space.semisimple = static_cast<int>(space.approx_basis.size()) == space.multiplicity;
      const Eigen::MatrixXd gram = basis_v.transpose() * gram_metric * basis_v;
      space.nondegenerate = gram.size() > 0 && smallest_singular_value(gram) > null_tol;
    }
    out.eigenspaces.push_back(std::move(space));
    start = end;
  }
}

}  // namespace

Endomorphism reduced_jacobi(const CurvatureTensor& r, const Vector& x) {
  const ScalarProduct& g = r.space();
  nonnull_norm(g, x);
  const Matrix b = Matrix::from_columns(orthogonal_complement_basis(g, x));
  const Matrix bt = b.transpose();
  return inverse(bt * b) * bt * jacobi_operator(r, x) * b;
}

Polynomial normalized_char_poly(const CurvatureTensor& r, const Vector& x) {
  const Rational eps = nonnull_norm(r.space(), x);
  return char_poly((1 / eps) * jacobi_operator(r, x));
}

Polynomial reduced_char_poly(const CurvatureTensor& r, const Vector& x) {
  const Rational eps = nonnull_norm(r.space(), x);
  return char_poly((1 / eps) * reduced_jacobi(r, x));
}

OssermanVerdict is_osserman(const CurvatureTensor& r, std::size_t samples, std::uint64_t seed) {
  if (samples < 2) throw PreconditionError("Osserman sampling needs at least 2 samples");
  OssermanVerdict verdict;
  verdict.seed = seed;
  verdict.is_osserman = true;
  std::optional<int> k_common;
  bool k_consistent = true;
  for (const auto& x : sample_nonnull(r.space(), samples, seed)) {
    const Polynomial p = normalized_char_poly(r, x);
    const int k = squarefree_part(reduced_char_poly(r, x)).degree();
    if (verdict.samples_used == 0) {
      verdict.reference_char_poly = p;
      k_common = k;
    } else {
      if (p != verdict.reference_char_poly && verdict.is_osserman) {
        verdict.is_osserman = false;
        verdict.counterexample = std::make_pair(x, p);
      }
      if (k != k_common) k_consistent = false;
    }
    ++verdict.samples_used;
  }
  if (k_consistent) verdict.k_root = k_common;
  verdict.diagonalizable = is_jacobi_diagonalizable(r, samples, seed).diagonalizable;
  return verdict;
}

bool SpectralDecomposition::diagonalizable() const {
  return std::all_of(eigenspaces.begin(), eigenspaces.end(), [](const Eigenspace& e) {
    return e.approx_imag == 0.0 && e.semisimple && e.nondegenerate;
  });
}

std::vector<Rational> SpectralDecomposition::exact_values() const {
  if (!exact) throw UnsupportedError("spectrum is not rational");
  std::vector<Rational> out;
  for (const auto& e : eigenspaces) out.push_back(*e.value);
  return out;
}

SpectralDecomposition spectral_decomposition(const CurvatureTensor& r, const Vector& x,
                                             const SpectralOptions& options) {
  const ScalarProduct& g = r.space();
  SpectralDecomposition out;
  out.base_vector = x;
  out.epsilon = nonnull_norm(g, x);
  const std::vector<Vector> complement_basis = orthogonal_complement_basis(g, x);
  const Matrix b = Matrix::from_columns(complement_basis);
  const Matrix normalized = (1 / out.epsilon) * reduced_jacobi(r, x);
  const RationalFactorization fact = factor_rational_roots(char_poly(normalized));

  if (fact.fully_split()) {
    out.exact = true;
    const std::size_t m = normalized.rows();
    for (const auto& root : fact.roots) {
      Eigenspace space;
      space.value = root.value;
      space.approx_value = root.value.get_d();
      space.multiplicity = root.multiplicity;
      for (const auto& v : nullspace(normalized - root.value * Matrix::identity(m))) {
        space.basis.push_back(primitive(b * v));
      }
      space.semisimple = static_cast<int>(space.basis.size()) == space.multiplicity;
      const Matrix basis = Matrix::from_columns(space.basis);
      space.nondegenerate = determinant(basis.transpose() * g.metric() * basis) != 0;
      out.eigenspaces.push_back(std::move(space));
    }
    return out;
  }
  if (options.exact_only) {
    throw UnsupportedError("reduced Jacobi operator has irrational eigenvalues");
  }
  approximate_spectrum(normalized, b, g, options, out);
  return out;
}

bool jacobi_diagonalizable_at(const CurvatureTensor& r, const Vector& x,
                              const SpectralOptions& options) {
  const Rational eps = nonnull_norm(r.space(), x);
  const Matrix normalized = (1 / eps) * reduced_jacobi(r, x);
  const Polynomial minimal = minimal_poly(normalized);
  if (gcd(minimal, minimal.derivative()).degree() > 0) return false;
  if (count_real_roots(minimal) != minimal.degree()) return false;
  return spectral_decomposition(r, x, options).diagonalizable();
}

DiagonalizabilityReport is_jacobi_diagonalizable(const CurvatureTensor& r, std::size_t samples,
                                                 std::uint64_t seed,
                                                 const SpectralOptions& options) {
  DiagonalizabilityReport report;
  for (const auto& x : sample_nonnull(r.space(), samples, seed)) {
    ++report.samples_used;
    if (!jacobi_diagonalizable_at(r, x, options)) {
      report.diagonalizable = false;
      report.witnesses.push_back(x);
    }
  }
  return report;
}

Endomorphism complement_projector(const ScalarProduct& g, const Vector& x) {
  const Rational eps = nonnull_norm(g, x);
  return Matrix::identity(g.dim()) - (1 / eps) * Matrix::outer(x, g.lower(x));
}

std::vector<Endomorphism> spectral_projectors(const CurvatureTensor& r, const Vector& x,
                                              const std::vector<Rational>& eigenvalues) {
  const ScalarProduct& g = r.space();
  const Rational eps = nonnull_norm(g, x);
  const Matrix jx = jacobi_operator(r, x);
  const Matrix q = complement_projector(g, x);
  const Matrix id = Matrix::identity(g.dim());
  std::vector<Endomorphism> out;
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    Matrix p = q;
    for (std::size_t j = 0; j < eigenvalues.size(); ++j) {
      if (j == i) continue;
      const Rational gap = eigenvalues[i] - eigenvalues[j];
      if (gap == 0) throw InputError("spectral projectors need distinct eigenvalues");
      p = (1 / (eps * gap)) * (p * (jx - eps * eigenvalues[j] * id));
    }
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

void require_matching_spectra(const SpectralDecomposition& a, const SpectralDecomposition& b,
                              double tol) {
  bool match = a.k() == b.k() && a.exact == b.exact;
  for (std::size_t i = 0; match && i < a.k(); ++i) {
    const auto& ea = a.eigenspaces[i];
    const auto& eb = b.eigenspaces[i];
    match = ea.multiplicity == eb.multiplicity &&
            (a.exact ? *ea.value == *eb.value
                     : std::abs(ea.approx_value - eb.approx_value) <=
                           tol * std::max(1.0, std::abs(ea.approx_value)));
  }
  if (!match) {
    throw StructureError("eigenvalue multisets differ between the two vectors");
  }
}

// ε of the g-projection of v onto span(basis), in floating point.
double approx_component_norm(const std::vector<std::vector<double>>& basis, const Matrix& metric,
                             const Vector& v) {
  const long n = static_cast<long>(metric.rows());
  Eigen::MatrixXd b(n, static_cast<long>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (long i = 0; i < n; ++i) b(i, static_cast<long>(j)) = basis[j][static_cast<std::size_t>(i)];
  }
  const Eigen::MatrixXd gm = to_eigen(metric);
  Eigen::VectorXd vd(n);
  for (long i = 0; i < n; ++i) vd(i) = v[static_cast<std::size_t>(i)].get_d();
  const Eigen::VectorXd rhs = b.transpose() * gm * vd;
  const Eigen::MatrixXd gram = b.transpose() * gm * b;
  return rhs.dot(gram.fullPivLu().solve(rhs));
}

}  // namespace

ProportionalityReport check_proportionality(const CurvatureTensor& r,
                                            const std::vector<std::pair<Vector, Vector>>& pairs,
                                            const SpectralOptions& options) {
  const ScalarProduct& g = r.space();
  ProportionalityReport report;
  for (const auto& [x, y] : pairs) {
    const Rational eps_x = nonnull_norm(g, x);
    const Rational eps_y = nonnull_norm(g, y);
    const SpectralDecomposition dx = spectral_decomposition(r, x, options);
    const SpectralDecomposition dy = spectral_decomposition(r, y, options);
    if (!dx.diagonalizable() || !dy.diagonalizable()) {
      throw PreconditionError("proportionality needs Jacobi-diagonalizable operators");
    }
    require_matching_spectra(dx, dy, options.tol);
    ++report.pairs_checked;

    const Rational cross = g.inner(x, y);
    // Index 0: Y_0 = (g(X,Y)/ε_X)·X, so ε_X·ε_{Y_0} = g(X,Y)² = ε_Y·ε_{X_0}.
    std::vector<Rational> y_parts{cross * cross / eps_x};
    std::vector<Rational> x_parts{cross * cross / eps_y};
    if (dx.exact) {
      const auto values = dx.exact_values();
      for (const auto& p : spectral_projectors(r, x, values)) {
        const Vector yi = p * y;
        y_parts.push_back(g.squared_norm(yi));
      }
      for (const auto& p : spectral_projectors(r, y, values)) {
        const Vector xi = p * x;
        x_parts.push_back(g.squared_norm(xi));
      }
      for (std::size_t i = 0; i < y_parts.size(); ++i) {
        const Rational lhs = eps_x * y_parts[i];
        const Rational rhs = eps_y * x_parts[i];
        if (lhs != rhs) {
          report.holds = false;
          report.witnesses.push_back({x, y, i, lhs.get_d(), rhs.get_d(), lhs, rhs});
        }
      }
    } else {
      report.exact = false;
      std::vector<double> y_approx{y_parts[0].get_d()};
      std::vector<double> x_approx{x_parts[0].get_d()};
      for (std::size_t i = 0; i < dx.k(); ++i) {
        y_approx.push_back(approx_component_norm(dx.eigenspaces[i].approx_basis, g.metric(), y));
        x_approx.push_back(approx_component_norm(dy.eigenspaces[i].approx_basis, g.metric(), x));
      }
      for (std::size_t i = 0; i < y_approx.size(); ++i) {
        const double lhs = eps_x.get_d() * y_approx[i];
        const double rhs = eps_y.get_d() * x_approx[i];
        const double bound = 1e3 * options.tol * std::max({1.0, std::abs(lhs), std::abs(rhs)});
        if (std::abs(lhs - rhs) > bound) {
          report.holds = false;
          report.witnesses.push_back({x, y, i, lhs, rhs, std::nullopt, std::nullopt});
        }
      }
    }
  }
  return report;
}

std::vector<std::pair<Vector, Vector>> sample_pairs(const ScalarProduct& g, std::size_t count,
                                                    std::uint64_t seed) {
  SampleRng rng(seed);
  std::vector<std::pair<Vector, Vector>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Vector x = rng.nonnull_vector(g);
    Vector y = rng.nonnull_vector(g);
    out.emplace_back(std::move(x), std::move(y));
  }
  return out;
}

void validate(const CliffordSpec& spec) {
  const ScalarProduct& g = spec.space;
  if (spec.coefficients.size() != spec.structures.size() + 1) {
    throw StructureError("Clifford spec needs one coefficient for R1 plus one per structure");
  }
  const Matrix id = Matrix::identity(g.dim());
  for (std::size_t i = 0; i < spec.structures.size(); ++i) {
    const auto& s = spec.structures[i];
    const std::string label = "structure " + std::to_string(i + 1);
    if (s.matrix.rows() != g.dim() || s.matrix.cols() != g.dim()) {
      throw StructureError(label + " has the wrong shape");
    }
    if (s.kind == StructureKind::product && !g.is_neutral()) {
      throw StructureError(label + ": product structures exist only on neutral signature");
    }
    if (!is_skew_adjoint(g, s.matrix)) throw StructureError(label + " is not skew-adjoint");
    const Matrix square = s.matrix * s.matrix;
    if (s.kind == StructureKind::complex && square != Rational(-1) * id) {
      throw StructureError(label + ": complex structure must satisfy J^2 = -id");
    }
    if (s.kind == StructureKind::product && square != id) {
      throw StructureError(label + ": product structure must satisfy J^2 = id");
    }
  }
  for (std::size_t i = 0; i < spec.structures.size(); ++i) {
    for (std::size_t j = i + 1; j < spec.structures.size(); ++j) {
      const Matrix& a = spec.structures[i].matrix;
      const Matrix& b = spec.structures[j].matrix;
      if (!(a * b + b * a).is_zero()) {
        throw StructureError("structures " + std::to_string(i + 1) + " and " +
                             std::to_string(j + 1) + " do not anticommute");
      }
    }
  }
}

CurvatureTensor structure_tensor(const ScalarProduct& g, const Endomorphism& j) {
  require_dim(g, j);
  const std::size_t n = g.dim();
  // s(a, b) = g(J e_a, e_b)
  const Matrix s = j.transpose() * g.metric();
  std::vector<Rational> c(n * n * n * n);
  std::size_t idx = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          c[idx++] = s(a, k) * s(b, l) - s(b, k) * s(a, l) + 2 * s(a, b) * s(k, l);
        }
      }
    }
  }
  return CurvatureTensor(g, std::move(c));
}

CurvatureTensor build_clifford(const CliffordSpec& spec) {
  validate(spec);
  std::vector<std::pair<Rational, CurvatureTensor>> terms;
  terms.emplace_back(spec.coefficients[0], constant_curvature_tensor(spec.space));
  for (std::size_t i = 0; i < spec.structures.size(); ++i) {
    terms.emplace_back(spec.coefficients[i + 1],
                       structure_tensor(spec.space, spec.structures[i].matrix));
  }
  return linear_combination(spec.space, terms);
}

JacobiFamily clifford_family(const CliffordSpec& spec) {
  validate(spec);
  return JacobiFamily(spec.space, FamilyDomain::total, Provenance::clifford,
                      [spec](const Vector& x) {
                        const ScalarProduct& g = spec.space;
                        const std::size_t n = g.dim();
                        Matrix k = spec.coefficients[0] *
                                   (g.squared_norm(x) * Matrix::identity(n) -
                                    Matrix::outer(x, g.lower(x)));
                        for (std::size_t i = 0; i < spec.structures.size(); ++i) {
                          const Vector jx = spec.structures[i].matrix * x;
                          k -= (3 * spec.coefficients[i + 1]) * Matrix::outer(jx, g.lower(jx));
                        }
                        return k;
                      });
}

JacobiFamily eigen_substitute(const CurvatureTensor& r, const std::vector<Rational>& new_eigenvalues,
                              const SubstitutionOptions& options) {
  const ScalarProduct& g = r.space();
  const OssermanVerdict verdict = is_osserman(r, options.samples, options.seed);
  if (!verdict.is_osserman) throw PreconditionError("tensor is not Osserman on the samples");
  if (!verdict.diagonalizable) {
    throw PreconditionError("tensor is not Jacobi-diagonalizable on the samples");
  }
  const Vector reference = sample_nonnull(g, 1, options.seed).front();
  SpectralOptions exact;
  exact.exact_only = true;
  const std::vector<Rational> values = spectral_decomposition(r, reference, exact).exact_values();
  if (values.size() != new_eigenvalues.size()) {
    throw InputError("tensor has " + std::to_string(values.size()) +
                     " distinct reduced eigenvalues but " +
                     std::to_string(new_eigenvalues.size()) + " replacements were given");
  }
  const auto pairs = sample_pairs(g, std::max<std::size_t>(1, options.samples / 2), options.seed);
  if (!check_proportionality(r, pairs, exact).holds) {
    throw PreconditionError("tensor is not Jacobi-proportional on the samples");
  }

  return JacobiFamily(
      g, FamilyDomain::nonnull_only, Provenance::eigen_substitution,
      [r, values, mu = new_eigenvalues](const Vector& x) {
        const ScalarProduct& g = r.space();
        const Rational eps = g.squared_norm(x);
        const Matrix jx = jacobi_operator(r, x);
        const Matrix id = Matrix::identity(g.dim());
        Matrix annihilator = complement_projector(g, x);
        for (const auto& v : values) annihilator = annihilator * (jx - eps * v * id);
        if (!annihilator.is_zero()) {
          throw DomainError("Jacobi operator does not have the sampled spectrum at this vector");
        }
        const auto projectors = spectral_projectors(r, x, values);
        Matrix k(g.dim(), g.dim());
        for (std::size_t i = 0; i < projectors.size(); ++i) k += (eps * mu[i]) * projectors[i];
        return k;
      });
}

std::optional<bool> sample_two_root_proportionality(const CurvatureTensor& r, std::size_t pairs,
                                                    std::uint64_t seed) {
  const OssermanVerdict verdict = is_osserman(r, std::max<std::size_t>(2, pairs), seed);
  if (!verdict.is_osserman || verdict.k_root != 2 || !verdict.diagonalizable) return std::nullopt;
  return check_proportionality(r, sample_pairs(r.space(), pairs, seed)).holds;
}

}  // namespace curvforge
