#include "curvforge/jacobi_family.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "curvforge/error.hpp"
#include "curvforge/sampling.hpp"

namespace curvforge {

std::string_view to_string(FamilyDomain domain) {
  return domain == FamilyDomain::total ? "total" : "nonnull_only";
}

std::string_view to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::from_tensor: return "from_tensor";
    case Provenance::clifford: return "clifford";
    case Provenance::eigen_substitution: return "eigen_substitution";
    case Provenance::user_table: return "table";
    case Provenance::counterexample: return "epsilon_id";
  }
  return "unknown";
}

std::string_view to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::self_adjoint: return "self_adjoint";
    case Axiom::compatibility: return "compatibility";
    case Axiom::annihilation: return "annihilation";
    case Axiom::homogeneity: return "homogeneity";
    case Axiom::cocycle: return "cocycle";
  }
  return "unknown";
}

std::string_view identity_of(Axiom axiom) {
  switch (axiom) {
    case Axiom::self_adjoint: return "g(K_X V, W) = g(V, K_X W)";
    case Axiom::compatibility: return "g(K_X Y, Y) = g(K_Y X, X)";
    case Axiom::annihilation: return "K_X X = 0";
    case Axiom::homogeneity: return "K_{tX} = t^2 K_X";
    case Axiom::cocycle: return "K_{X+Y} Y - K_X Y + K_Y X = 0";
  }
  return "";
}

JacobiFamily::JacobiFamily(ScalarProduct space, FamilyDomain domain, Provenance provenance,
                           Evaluator evaluate, bool closed_form)
    : space_(std::move(space)),
      domain_(domain),
      provenance_(provenance),
      evaluate_(std::move(evaluate)),
      closed_form_(closed_form) {}

JacobiFamily JacobiFamily::zero(const ScalarProduct& g) {
  const std::size_t n = g.dim();
  return JacobiFamily(g, FamilyDomain::total, Provenance::from_tensor,
                      [n](const Vector&) { return Matrix::zero(n, n); });
}

JacobiFamily JacobiFamily::epsilon_identity(const ScalarProduct& g) {
  return JacobiFamily(g, FamilyDomain::nonnull_only, Provenance::counterexample,
                      [g](const Vector& x) { return g.squared_norm(x) * Matrix::identity(g.dim()); });
}

JacobiFamily JacobiFamily::table(const ScalarProduct& g,
                                 std::vector<std::pair<Vector, Endomorphism>> entries) {
  std::vector<Vector> points;
  for (const auto& [x, m] : entries) {
    require_dim(g, x);
    require_dim(g, m);
    points.push_back(x);
  }
  JacobiFamily family(
      g, FamilyDomain::total, Provenance::user_table,
      [entries = std::move(entries)](const Vector& x) {
        for (const auto& [key, m] : entries) {
          if (key == x) return m;
        }
        throw DomainError("table family has no entry for the requested vector");
      },
      false);
  family.table_points_ = std::move(points);
  return family;
}

bool JacobiFamily::contains(const Vector& x) const {
  if (x.size() != space_.dim()) return false;
  return domain_ == FamilyDomain::total || space_.classify(x) == VectorKind::nonnull;
}

Endomorphism JacobiFamily::operator()(const Vector& x) const {
  require_dim(space_, x);
  if (!contains(x)) {
    throw DomainError("family is defined on nonnull vectors only; got a " +
                      std::string(space_.classify(x) == VectorKind::zero ? "zero" : "null") +
                      " vector");
  }
  Endomorphism m = evaluate_(x);
  require_dim(space_, m);
  return m;
}

namespace {

struct VectorLess {
  bool operator()(const Vector& a, const Vector& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

// Memoizes evaluations within one check run; families themselves never cache.
class EvalCache {
 public:
  explicit EvalCache(const JacobiFamily& k) : k_(k) {}
  const Endomorphism& operator()(const Vector& x) {
    auto it = cache_.find(x);
    if (it == cache_.end()) it = cache_.emplace(x, k_(x)).first;
    return it->second;
  }

 private:
  const JacobiFamily& k_;
  std::map<Vector, Endomorphism, VectorLess> cache_;
};

bool witness_less(const Witness& a, const Witness& b) {
  if (a.axiom != b.axiom) return a.axiom < b.axiom;
  VectorLess less;
  if (a.vectors.size() != b.vectors.size()) return a.vectors.size() < b.vectors.size();
  for (std::size_t i = 0; i < a.vectors.size(); ++i) {
    if (less(a.vectors[i], b.vectors[i])) return true;
    if (less(b.vectors[i], a.vectors[i])) return false;
  }
  return a.scale.value_or(0) < b.scale.value_or(0);
}

void set_flag(AxiomReport& r, Axiom axiom, bool value) {
  switch (axiom) {
    case Axiom::self_adjoint: r.self_adjoint_ok = value; break;
    case Axiom::compatibility: r.compatible_ok = value; break;
    case Axiom::annihilation: r.annihilation_ok = value; break;
    case Axiom::homogeneity: r.homogeneity_ok = value; break;
    case Axiom::cocycle: r.cocycle_ok = value; break;
  }
}

void record(AxiomReport& r, Witness w) {
  set_flag(r, w.axiom, false);
  ++r.violations;
  r.witnesses.push_back(std::move(w));
}

void finalize(AxiomReport& r) {
  std::stable_sort(r.witnesses.begin(), r.witnesses.end(), witness_less);
  std::vector<Witness> kept;
  std::map<Axiom, std::size_t> per_axiom;
  for (auto& w : r.witnesses) {
    if (per_axiom[w.axiom]++ < kMaxWitnesses) kept.push_back(std::move(w));
  }
  r.witnesses = std::move(kept);
}

Matrix self_adjoint_residual(const ScalarProduct& g, const Endomorphism& a) {
  return g.metric() * a - a.transpose() * g.metric();
}

Rational compatibility_residual(const ScalarProduct& g, const Endomorphism& kx,
                                const Endomorphism& ky, const Vector& x, const Vector& y) {
  return g.inner(kx * y, y) - g.inner(ky * x, x);
}

Vector cocycle_residual(const Endomorphism& kxy, const Endomorphism& kx, const Endomorphism& ky,
                        const Vector& x, const Vector& y) {
  return kxy * y - kx * y + ky * x;
}

}  // namespace

bool AxiomReport::all_ok() const {
  return self_adjoint_ok && compatible_ok && annihilation_ok && homogeneity_ok && cocycle_ok;
}

bool AxiomReport::ok(Axiom axiom) const {
  switch (axiom) {
    case Axiom::self_adjoint: return self_adjoint_ok;
    case Axiom::compatibility: return compatible_ok;
    case Axiom::annihilation: return annihilation_ok;
    case Axiom::homogeneity: return homogeneity_ok;
    case Axiom::cocycle: return cocycle_ok;
  }
  return false;
}

std::optional<Axiom> AxiomReport::first_failure() const {
  for (Axiom a : {Axiom::self_adjoint, Axiom::compatibility, Axiom::annihilation,
                  Axiom::homogeneity, Axiom::cocycle}) {
    if (!ok(a)) return a;
  }
  return std::nullopt;
}

void AxiomReport::merge(const AxiomReport& other) {
  self_adjoint_ok = self_adjoint_ok && other.self_adjoint_ok;
  compatible_ok = compatible_ok && other.compatible_ok;
  annihilation_ok = annihilation_ok && other.annihilation_ok;
  homogeneity_ok = homogeneity_ok && other.homogeneity_ok;
  cocycle_ok = cocycle_ok && other.cocycle_ok;
  checks += other.checks;
  violations += other.violations;
  witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
  finalize(*this);
}

bool replay(const JacobiFamily& k, const Witness& w) {
  const ScalarProduct& g = k.space();
  const auto& v = w.vectors;
  switch (w.axiom) {
    case Axiom::self_adjoint: return !self_adjoint_residual(g, k(v.at(0))).is_zero();
    case Axiom::annihilation: return !(k(v.at(0)) * v.at(0)).is_zero();
    case Axiom::compatibility:
      return compatibility_residual(g, k(v.at(0)), k(v.at(1)), v.at(0), v.at(1)) != 0;
    case Axiom::homogeneity: {
      const Rational t = w.scale.value();
      return k(t * v.at(0)) != t * t * k(v.at(0));
    }
    case Axiom::cocycle:
      return !cocycle_residual(k(v.at(0) + v.at(1)), k(v.at(0)), k(v.at(1)), v.at(0), v.at(1))
                  .is_zero();
  }
  return false;
}

AxiomReport check_self_adjoint(const JacobiFamily& k, const std::vector<Vector>& samples) {
  AxiomReport r;
  for (const auto& x : samples) {
    ++r.checks;
    Matrix residual = self_adjoint_residual(k.space(), k(x));
    if (!residual.is_zero()) record(r, {Axiom::self_adjoint, {x}, std::nullopt, residual});
  }
  finalize(r);
  return r;
}

AxiomReport check_compatibility(const JacobiFamily& k,
                                const std::vector<std::pair<Vector, Vector>>& pairs) {
  AxiomReport r;
  EvalCache eval(k);
  for (const auto& [x, y] : pairs) {
    ++r.checks;
    Rational residual = compatibility_residual(k.space(), eval(x), eval(y), x, y);
    if (residual != 0) record(r, {Axiom::compatibility, {x, y}, std::nullopt, residual});
  }
  finalize(r);
  return r;
}

AxiomReport check_annihilation(const JacobiFamily& k, const std::vector<Vector>& samples) {
  AxiomReport r;
  for (const auto& x : samples) {
    ++r.checks;
    Vector residual = k(x) * x;
    if (!residual.is_zero()) record(r, {Axiom::annihilation, {x}, std::nullopt, residual});
  }
  finalize(r);
  return r;
}

AxiomReport check_homogeneity(const JacobiFamily& k,
                              const std::vector<std::pair<Vector, Rational>>& samples) {
  AxiomReport r;
  EvalCache eval(k);
  for (const auto& [x, t] : samples) {
    if (t == 0) throw PreconditionError("homogeneity check needs a nonzero scale");
    ++r.checks;
    Matrix residual = k(t * x) - t * t * eval(x);
    if (!residual.is_zero()) record(r, {Axiom::homogeneity, {x}, t, residual});
  }
  finalize(r);
  return r;
}

AxiomReport check_cocycle(const JacobiFamily& k,
                          const std::vector<std::pair<Vector, Vector>>& pairs) {
  AxiomReport r;
  EvalCache eval(k);
  for (const auto& [x, y] : pairs) {
    ++r.checks;
    Vector residual = cocycle_residual(k(x + y), eval(x), eval(y), x, y);
    if (!residual.is_zero()) record(r, {Axiom::cocycle, {x, y}, std::nullopt, residual});
  }
  finalize(r);
  return r;
}

Rational mu_form(const JacobiFamily& k, const Vector& x, const Vector& y) {
  return k.space().inner(k(y) * x, x);
}

SampleSet make_samples(const ScalarProduct& g, FamilyDomain domain, std::size_t budget,
                       std::uint64_t seed) {
  if (budget == 0) throw PreconditionError("sample budget must be at least 1");
  const std::size_t n = g.dim();
  SampleRng rng(seed);
  SampleSet s;
  auto admit = [&](const Vector& v) {
    return domain == FamilyDomain::total || g.classify(v) == VectorKind::nonnull;
  };
  for (std::size_t i = 0; i < n && s.vectors.size() < budget; ++i) {
    Vector e = Vector::basis(n, i);
    if (admit(e)) s.vectors.push_back(std::move(e));
  }
  const bool with_nulls = domain == FamilyDomain::total && !g.is_definite();
  std::size_t null_quota = with_nulls ? std::max<std::size_t>(1, budget / 4) : 0;
  NullSampler nulls(g, seed ^ 0x9e3779b97f4a7c15ULL);
  if (!nulls.available()) null_quota = 0;
  const std::size_t random_quota =
      budget > s.vectors.size() + null_quota ? budget - s.vectors.size() - null_quota : 0;
  for (std::size_t i = 0; i < random_quota; ++i) s.vectors.push_back(rng.nonnull_vector(g));
  for (std::size_t i = 0; i < null_quota; ++i) s.vectors.push_back(nulls.next());
  if (domain == FamilyDomain::total && budget > n) s.vectors.push_back(Vector::zero(n));

  const std::size_t m = s.vectors.size();
  for (std::size_t i = 0; i < budget && m > 1; ++i) {
    const std::size_t a = i % m;
    const std::size_t b = (a + 1 + i / m) % m;
    s.pairs.emplace_back(s.vectors[a], s.vectors[b == a ? (a + 1) % m : b]);
  }
  for (std::size_t i = 0; i < budget; ++i) {
    Vector x = rng.nonnull_vector(g);
    s.pairs.emplace_back(x, i % 2 == 0 ? rng.nonnull_vector(g) : s.vectors[i % m]);
  }
  const Rational fixed_scales[] = {Rational(-1), Rational(2)};
  for (std::size_t i = 0; i < m; ++i) {
    const Rational t = i < 2 ? fixed_scales[i] : rng.nonzero_rational();
    s.scaled.emplace_back(s.vectors[i], t);
  }
  return s;
}

namespace {

AxiomReport run_table_suite(const JacobiFamily& k) {
  const auto& pts = k.table_points();
  auto known = [&](const Vector& v) { return std::find(pts.begin(), pts.end(), v) != pts.end(); };
  std::vector<std::pair<Vector, Vector>> pairs;
  std::vector<std::pair<Vector, Vector>> cocycle_pairs;
  std::vector<std::pair<Vector, Rational>> scaled;
  for (const auto& x : pts) {
    for (const auto& y : pts) {
      pairs.emplace_back(x, y);
      if (known(x + y)) cocycle_pairs.emplace_back(x, y);
      // y = t·x with t ≠ 0?
      if (x.is_zero() || y.is_zero()) continue;
      std::size_t i = 0;
      while (x[i] == 0) ++i;
      const Rational t = y[i] / x[i];
      if (t != 0 && t * x == y) scaled.emplace_back(x, t);
    }
  }
  AxiomReport report;
  report.merge(check_self_adjoint(k, pts));
  report.merge(check_compatibility(k, pairs));
  report.merge(check_annihilation(k, pts));
  report.merge(check_homogeneity(k, scaled));
  report.merge(check_cocycle(k, cocycle_pairs));
  return report;
}

}  // namespace

AxiomReport run_axiom_suite(const JacobiFamily& k, std::size_t sample_budget, std::uint64_t seed) {
  if (!k.closed_form()) return run_table_suite(k);
  const ScalarProduct& g = k.space();
  const SampleSet s = make_samples(g, k.domain(), sample_budget, seed);
  std::vector<std::pair<Vector, Vector>> pairs;
  std::vector<std::pair<Vector, Vector>> cocycle_pairs;
  for (const auto& p : s.pairs) {
    if (!k.contains(p.first) || !k.contains(p.second)) continue;
    pairs.push_back(p);
    if (k.contains(p.first + p.second)) cocycle_pairs.push_back(p);
  }
  AxiomReport report;
  report.merge(check_self_adjoint(k, s.vectors));
  report.merge(check_compatibility(k, pairs));
  report.merge(check_annihilation(k, s.vectors));
  report.merge(check_homogeneity(k, s.scaled));
  report.merge(check_cocycle(k, cocycle_pairs));
  return report;
}

std::vector<Vector> admissible_directions(const ScalarProduct& g, const Vector& null_vector,
                                          std::size_t count) {
  require_dim(g, null_vector);
  std::vector<Vector> out;
  // For a nonnull direction d, ε_{N±td} = ±2t·g(N,d) + t²ε_d vanishes for at
  // most one positive t each, so a handful of scales always suffices.
  constexpr int kMaxScale = 24;
  auto scan = [&](const Vector& d) {
    if (g.squared_norm(d) == 0) return;
    for (int t = 1; t <= kMaxScale; ++t) {
      const Vector x = Rational(t) * d;
      if (g.squared_norm(null_vector + x) != 0 && g.squared_norm(null_vector - x) != 0) {
        out.push_back(x);
        return;
      }
    }
  };
  for (std::size_t i = 0; i < g.dim() && out.size() < count; ++i) {
    scan(Vector::basis(g.dim(), i));
  }
  for (const auto& b : g.orthogonal_basis()) {
    if (out.size() >= count) break;
    if (std::find_if(out.begin(), out.end(), [&](const Vector& x) {
          return rank(Matrix::from_columns(std::vector<Vector>{x, b})) < 2;
        }) != out.end()) {
      continue;
    }
    scan(b);
  }
  return out;
}

Endomorphism extend_to_null_via(const JacobiFamily& k, const Vector& null_vector,
                                const Vector& direction) {
  const ScalarProduct& g = k.space();
  if (g.classify(null_vector) != VectorKind::null) {
    throw PreconditionError("extend_to_null expects a null vector");
  }
  if (g.squared_norm(direction) == 0 || g.squared_norm(null_vector + direction) == 0 ||
      g.squared_norm(null_vector - direction) == 0) {
    throw PreconditionError("direction is not admissible for this null vector");
  }
  Endomorphism kn = k(null_vector + direction) + k(null_vector - direction) -
                    Rational(2) * k(direction);
  kn *= Rational(1, 2);
  return kn;
}

Endomorphism extend_to_null(const JacobiFamily& k, const Vector& null_vector,
                            NullExtensionMode mode) {
  const std::size_t wanted = mode == NullExtensionMode::verify ? 2 : 1;
  const auto dirs = admissible_directions(k.space(), null_vector, wanted);
  if (dirs.empty()) throw InternalError("no admissible direction for null extension");
  Endomorphism kn = extend_to_null_via(k, null_vector, dirs[0]);
  if (mode == NullExtensionMode::verify && dirs.size() > 1) {
    if (extend_to_null_via(k, null_vector, dirs[1]) != kn) {
      throw InternalError("null extension depends on the chosen direction");
    }
  }
  return kn;
}

JacobiFamily totalize(const JacobiFamily& k, NullExtensionMode mode) {
  if (!k.closed_form()) {
    throw PreconditionError("table families are verification-only and cannot be totalized");
  }
  if (k.domain() == FamilyDomain::total) return k;
  const std::size_t n = k.space().dim();
  return JacobiFamily(
      k.space(), FamilyDomain::total, k.provenance(),
      [k, mode, n](const Vector& x) -> Endomorphism {
        switch (k.space().classify(x)) {
          case VectorKind::zero: return Matrix::zero(n, n);
          case VectorKind::null: return extend_to_null(k, x, mode);
          case VectorKind::nonnull: break;
        }
        return k(x);
      },
      true);
}

}  // namespace curvforge
