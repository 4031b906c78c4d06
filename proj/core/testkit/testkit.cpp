#include "testkit.hpp"

#include "curvforge/error.hpp"

namespace curvforge::testkit {

void validate(const GeneratorConfig& cfg) {
  if (cfg.p + cfg.q != cfg.dim) throw InputError("signature (p, q) must satisfy p + q = dim");
  if (cfg.dim == 0) throw InputError("dim must be positive");
  if (cfg.coefficient_bound < 0) throw InputError("coefficient_bound must be nonnegative");
}

nlohmann::json to_json(const GeneratorConfig& cfg) {
  return {{"dim", cfg.dim},
          {"signature", {cfg.p, cfg.q}},
          {"seed", cfg.seed},
          {"num_forms", cfg.num_forms},
          {"coefficient_bound", cfg.coefficient_bound}};
}

GeneratorConfig config_from_json(const nlohmann::json& doc) {
  GeneratorConfig cfg;
  try {
    cfg.dim = doc.at("dim").get<std::size_t>();
    const auto& sig = doc.at("signature");
    cfg.p = sig.at(0).get<std::size_t>();
    cfg.q = sig.at(1).get<std::size_t>();
    cfg.seed = doc.value("seed", std::uint64_t{0});
    cfg.num_forms = doc.value("num_forms", std::size_t{2});
    cfg.coefficient_bound = doc.value("coefficient_bound", std::int64_t{5});
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad generator config: ") + e.what());
  }
  validate(cfg);
  return cfg;
}

ScalarProduct space_of(const GeneratorConfig& cfg) {
  validate(cfg);
  return ScalarProduct::diagonal(cfg.p, cfg.q);
}

Matrix random_symmetric(SampleRng& rng, std::size_t n, std::int64_t bound) {
  Matrix phi(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      phi(i, j) = make_rational(rng.integer(-bound, bound), rng.integer(1, 2));
      phi(j, i) = phi(i, j);
    }
  }
  return phi;
}

CurvatureTensor random_act(const GeneratorConfig& cfg) {
  const ScalarProduct g = space_of(cfg);
  SampleRng rng(cfg.seed);
  std::vector<Matrix> forms;
  for (std::size_t a = 0; a < cfg.num_forms; ++a) {
    forms.push_back(random_symmetric(rng, cfg.dim, cfg.coefficient_bound));
  }
  return act_from_forms(g, forms);
}

CurvatureTensor act_from_forms(const ScalarProduct& g, const std::vector<Matrix>& forms) {
  std::vector<std::pair<Rational, CurvatureTensor>> terms;
  for (const auto& phi : forms) terms.emplace_back(Rational(1), form_tensor(g, phi));
  return linear_combination(g, terms);
}

JacobiFamily random_family(const GeneratorConfig& cfg) { return jacobi_family_of(random_act(cfg)); }

Rational oracle_contract(const CurvatureTensor& r, const Vector& x, const Vector& y,
                         const Vector& z, const Vector& w) {
  const std::size_t n = r.dim();
  if (r.components().size() != n * n * n * n || x.size() != n || y.size() != n ||
      z.size() != n || w.size() != n) {
    throw InputError("oracle_contract: shape mismatch");
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          sum += r.components()[((i * n + j) * n + k) * n + l] * x[i] * y[j] * z[k] * w[l];
        }
      }
    }
  }
  return sum;
}

Endomorphism oracle_jacobi(const CurvatureTensor& r, const Vector& x) {
  const std::size_t n = r.dim();
  Matrix lowered(n, n);
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t y = 0; y < n; ++y) {
      lowered(w, y) = oracle_contract(r, Vector::basis(n, y), x, x, Vector::basis(n, w));
    }
  }
  return inverse(r.space().metric()) * lowered;
}

namespace {

Matrix block_rotation(std::size_t n) {
  Matrix j(n, n);
  for (std::size_t i = 0; i + 1 < n; i += 2) {
    j(i + 1, i) = 1;
    j(i, i + 1) = -1;
  }
  return j;
}

// e_i ↔ e_{i+h}, h = n/2, with the sign flips listed in `negate`.
Matrix half_swap(std::size_t n, const std::vector<std::size_t>& negate) {
  const std::size_t h = n / 2;
  Matrix j(n, n);
  for (std::size_t i = 0; i < h; ++i) {
    j(i + h, i) = 1;
    j(i, i + h) = 1;
  }
  for (std::size_t i : negate) {
    for (std::size_t r = 0; r < n; ++r) j(r, i) = -j(r, i);
  }
  return j;
}

std::vector<CliffordStructure> standard_structures(std::size_t dim, bool neutral, SampleRng& rng) {
  const auto complex = StructureKind::complex;
  const auto product = StructureKind::product;
  if (dim == 4 && !neutral) {
    const Matrix j1 = block_rotation(4);
    const Matrix j2{{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}};
    const std::size_t m = static_cast<std::size_t>(rng.integer(1, 3));
    std::vector<CliffordStructure> all{{j1, complex}, {j2, complex}, {j1 * j2, complex}};
    all.resize(m);
    return all;
  }
  if (dim == 4) {
    const Matrix j1 = block_rotation(4);
    const Matrix j2 = half_swap(4, {3, 1});
    switch (rng.integer(0, 3)) {
      case 0: return {{j1, complex}};
      case 1: return {{j2, product}};
      case 2: return {{j1, complex}, {j2, product}};
      default: return {{j1, complex}, {j2, product}, {j1 * j2, product}};
    }
  }
  if (dim == 6 && !neutral) return {{block_rotation(6), complex}};
  if (dim == 6) return {{half_swap(6, {}), product}};
  throw InputError("random Clifford specs exist for dim 4 and 6 only");
}

// (I − S)⁻¹(I + S) with S = G⁻¹A, A antisymmetric: a g-isometry.
Matrix cayley_isometry(const ScalarProduct& g, SampleRng& rng) {
  const std::size_t n = g.dim();
  const Matrix id = Matrix::identity(n);
  for (;;) {
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        a(i, j) = make_rational(rng.integer(-1, 1), rng.integer(1, 2));
        a(j, i) = -a(i, j);
      }
    }
    const Matrix s = g.inverse_metric() * a;
    if (determinant(id - s) == 0) continue;
    return inverse(id - s) * (id + s);
  }
}

}  // namespace

CliffordSpec random_clifford_spec(std::size_t dim, bool neutral, std::uint64_t seed) {
  if (dim != 4 && dim != 6) throw InputError("random Clifford specs exist for dim 4 and 6 only");
  SampleRng rng(seed);
  const ScalarProduct g =
      neutral ? ScalarProduct::diagonal(dim / 2, dim / 2) : ScalarProduct::euclidean(dim);
  CliffordSpec spec{g, {rng.rational()}, standard_structures(dim, neutral, rng)};
  const Matrix o = cayley_isometry(g, rng);
  const Matrix o_inv = inverse(o);
  for (auto& s : spec.structures) {
    s.matrix = o * s.matrix * o_inv;
    spec.coefficients.push_back(rng.nonzero_rational());
  }
  return spec;
}

std::optional<Matrix> find_nilpotent_form(std::uint64_t seed, std::size_t attempts) {
  const ScalarProduct g = ScalarProduct::diagonal(2, 1);
  const Vector x = Vector::basis(3, 0);
  SampleRng rng(seed);
  for (std::size_t t = 0; t < attempts; ++t) {
    const Matrix phi = random_symmetric(rng, 3, 1);
    const Matrix m = reduced_jacobi(form_tensor(g, phi), x);
    if (!m.is_zero() && (m * m).is_zero()) return phi;
  }
  return std::nullopt;
}

}  // namespace curvforge::testkit
