#include "curvforge/curvature.hpp"

#include <string>

#include "parallel.hpp"

namespace curvforge {

namespace {

std::size_t fourth_power(std::size_t n) { return n * n * n * n; }

}  // namespace

CurvatureTensor::CurvatureTensor(ScalarProduct space, std::vector<Rational> components)
    : space_(std::move(space)), components_(std::move(components)) {
  if (components_.size() != fourth_power(space_.dim())) {
    throw InputError("tensor needs " + std::to_string(fourth_power(space_.dim())) +
                     " components, got " + std::to_string(components_.size()));
  }
  verified_ = verify_symmetries(*this).verified();
}

CurvatureTensor CurvatureTensor::zero(const ScalarProduct& g) {
  return CurvatureTensor(g, std::vector<Rational>(fourth_power(g.dim())));
}

std::string_view to_string(Symmetry s) {
  switch (s) {
    case Symmetry::antisymmetry_first_pair: return "antisymmetry_first_pair";
    case Symmetry::antisymmetry_second_pair: return "antisymmetry_second_pair";
    case Symmetry::first_bianchi: return "first_bianchi";
    case Symmetry::pair_exchange: return "pair_exchange";
  }
  return "unknown";
}

SymmetryReport verify_symmetries(const CurvatureTensor& r) {
  SymmetryReport report;
  const std::size_t n = r.dim();
  auto flag = [&](Symmetry s, std::array<std::size_t, 4> idx, Rational residual) {
    switch (s) {
      case Symmetry::antisymmetry_first_pair: report.antisymmetry_first_pair_ok = false; break;
      case Symmetry::antisymmetry_second_pair: report.antisymmetry_second_pair_ok = false; break;
      case Symmetry::first_bianchi: report.first_bianchi_ok = false; break;
      case Symmetry::pair_exchange: report.pair_exchange_ok = false; break;
    }
    ++report.violation_count;
    if (report.violations.size() < kMaxSymmetryViolations) {
      report.violations.push_back({s, idx, std::move(residual)});
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          const Rational& v = r(i, j, k, l);
          if (Rational s = v + r(j, i, k, l); s != 0) {
            flag(Symmetry::antisymmetry_first_pair, {i, j, k, l}, s);
          }
          if (Rational s = v + r(i, j, l, k); s != 0) {
            flag(Symmetry::antisymmetry_second_pair, {i, j, k, l}, s);
          }
          if (Rational s = v + r(j, k, i, l) + r(k, i, j, l); s != 0) {
            flag(Symmetry::first_bianchi, {i, j, k, l}, s);
          }
          if (Rational s = v - r(k, l, i, j); s != 0) {
            flag(Symmetry::pair_exchange, {i, j, k, l}, s);
          }
        }
      }
    }
  }
  return report;
}

Rational contract(const CurvatureTensor& r, const Vector& x, const Vector& y, const Vector& z,
                  const Vector& w) {
  const ScalarProduct& g = r.space();
  for (const Vector* v : {&x, &y, &z, &w}) require_dim(g, *v);
  const std::size_t n = r.dim();
  // Contract the last slot first, then peel off one index per pass.
  std::vector<Rational> t3(n * n * n);
  for (std::size_t a = 0; a < n * n * n; ++a) {
    for (std::size_t l = 0; l < n; ++l) {
      if (w[l] != 0) t3[a] += r.components()[a * n + l] * w[l];
    }
  }
  std::vector<Rational> t2(n * n);
  for (std::size_t a = 0; a < n * n; ++a) {
    for (std::size_t k = 0; k < n; ++k) {
      if (z[k] != 0) t2[a] += t3[a * n + k] * z[k];
    }
  }
  Rational total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < n; ++j) row += t2[i * n + j] * y[j];
    total += x[i] * row;
  }
  return total;
}

Endomorphism jacobi_operator(const CurvatureTensor& r, const Vector& x) {
  const ScalarProduct& g = r.space();
  require_dim(g, x);
  const std::size_t n = r.dim();
  // lowered(w, y) = R(e_y, X, X, e_w) = g(J_X e_y, e_w)
  Matrix lowered(n, n);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t j = 0; j < n; ++j) {
      if (x[j] == 0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (x[k] == 0) continue;
        const Rational xx = x[j] * x[k];
        for (std::size_t w = 0; w < n; ++w) {
          const Rational& c = r(y, j, k, w);
          if (c != 0) lowered(w, y) += c * xx;
        }
      }
    }
  }
  return g.inverse_metric() * lowered;
}

JacobiFamily jacobi_family_of(const CurvatureTensor& r, FamilyDomain domain) {
  return JacobiFamily(r.space(), domain, Provenance::from_tensor,
                      [r](const Vector& x) { return jacobi_operator(r, x); });
}

CurvatureTensor form_tensor(const ScalarProduct& g, const Matrix& phi) {
  require_dim(g, phi);
  if (!phi.is_symmetric()) throw InputError("bilinear form must be symmetric");
  const std::size_t n = g.dim();
  std::vector<Rational> c(fourth_power(n));
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          c[idx++] = phi(j, k) * phi(i, l) - phi(i, k) * phi(j, l);
        }
      }
    }
  }
  return CurvatureTensor(g, std::move(c));
}

CurvatureTensor constant_curvature_tensor(const ScalarProduct& g) {
  return form_tensor(g, g.metric());
}

CurvatureTensor linear_combination(const ScalarProduct& g,
                                   std::span<const std::pair<Rational, CurvatureTensor>> terms) {
  std::vector<Rational> c(fourth_power(g.dim()));
  for (const auto& [coef, t] : terms) {
    if (!(t.space() == g)) throw StructureError("tensors live on different scalar products");
    if (coef == 0) continue;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += coef * t.components()[i];
  }
  return CurvatureTensor(g, std::move(c));
}

AxiomRejection::AxiomRejection(Axiom axiom, AxiomReport report)
    : Error("family rejected: " + std::string(to_string(axiom)) + " hypothesis violated (" +
            std::string(identity_of(axiom)) + ")"),
      axiom_(axiom),
      report_(std::move(report)) {}

std::vector<Vector> jacobi_mismatches(const CurvatureTensor& r, const JacobiFamily& k,
                                      const std::vector<Vector>& samples) {
  std::vector<Vector> out;
  for (const auto& x : samples) {
    if (!k.contains(x)) continue;
    if (jacobi_operator(r, x) != k(x)) out.push_back(x);
  }
  return out;
}

CurvatureTensor reconstruct(const JacobiFamily& k, const ReconstructOptions& options) {
  if (!k.closed_form()) {
    throw PreconditionError("table families are verification-only and cannot be reconstructed");
  }
  if (k.domain() != FamilyDomain::total) {
    throw PreconditionError("reconstruction needs a total family; totalize it first");
  }
  const ScalarProduct& g = k.space();
  const std::size_t n = g.dim();

  SampleSet samples;
  if (options.enforce_axioms) {
    samples = make_samples(g, k.domain(), options.sample_budget, options.seed);
    AxiomReport report = run_axiom_suite(k, options.sample_budget, options.seed);
    if (auto failed = report.first_failure()) throw AxiomRejection(*failed, std::move(report));
  }

  // polar[j][k] = G·(K_{e_j+e_k} − K_{e_j} − K_{e_k}), symmetric in (j, k).
  std::vector<Endomorphism> single(n);
  detail::parallel_for(n, [&](std::size_t j) { single[j] = k(Vector::basis(n, j)); });
  std::vector<std::pair<std::size_t, std::size_t>> index_pairs;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = j; l < n; ++l) index_pairs.emplace_back(j, l);
  }
  std::vector<Matrix> polar(n * n);
  detail::parallel_for(index_pairs.size(), [&](std::size_t p) {
    const auto [j, l] = index_pairs[p];
    Endomorphism b = k(Vector::basis(n, j) + Vector::basis(n, l)) - single[j] - single[l];
    polar[j * n + l] = g.metric() * b;
  });
  for (const auto& [j, l] : index_pairs) polar[l * n + j] = polar[j * n + l];

  std::vector<Rational> c(fourth_power(n));
  const Rational third(1, 3);
  detail::parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t kk = 0; kk < n; ++kk) {
        for (std::size_t l = 0; l < n; ++l) {
          c[((i * n + j) * n + kk) * n + l] =
              (polar[j * n + kk](i, l) - polar[j * n + l](i, kk)) * third;
        }
      }
    }
  });
  CurvatureTensor r(g, std::move(c));

  if (options.enforce_axioms) {
    const auto bad = jacobi_mismatches(r, k, samples.vectors);
    if (!bad.empty()) {
      throw StructureError("reconstructed tensor's Jacobi operators differ from the family on " +
                           std::to_string(bad.size()) + " sample vector(s)");
    }
  }
  return r;
}

Rational reconstruction_value(const JacobiFamily& k, const Vector& x, const Vector& y,
                              const Vector& z, const Vector& w) {
  const ScalarProduct& g = k.space();
  const Endomorphism ky = k(y);
  const Endomorphism byz = k(y + z) - ky - k(z);
  const Endomorphism byw = k(y + w) - ky - k(w);
  return g.inner(byz * w - byw * z, x);
}

Rational mu_form_value(const JacobiFamily& k, const Vector& x, const Vector& y, const Vector& z,
                       const Vector& w) {
  const ScalarProduct& g = k.space();
  auto mu = [&](const Vector& a, const Vector& b) -> Rational {
    const Rational forward = g.inner(k(b) * a, a);
    const Rational backward = g.inner(k(a) * b, b);
    if (forward != backward) {
      AxiomReport report;
      report.compatible_ok = false;
      report.checks = 1;
      report.violations = 1;
      report.witnesses.push_back(
          {Axiom::compatibility, {a, b}, std::nullopt, Rational(backward - forward)});
      throw AxiomRejection(Axiom::compatibility, std::move(report));
    }
    return forward;
  };
  auto f = [&](int s, int t) -> Rational {
    const Rational rs(s), rt(t);
    return mu(x + rs * w, y + rt * z) - mu(x + rs * z, y + rt * w);
  };
  return (f(1, 1) - f(1, -1) - f(-1, 1) + f(-1, -1)) / 4;
}

EquivalenceReport verify_mu_form_equivalence(const JacobiFamily& k,
                                             const std::vector<Quadruple>& quadruples) {
  EquivalenceReport report;
  for (const auto& q : quadruples) {
    ++report.checked;
    if (mu_form_value(k, q.x, q.y, q.z, q.w) != 2 * reconstruction_value(k, q.x, q.y, q.z, q.w)) {
      report.agree = false;
      report.mismatches.push_back(q);
    }
  }
  return report;
}

}  // namespace curvforge
