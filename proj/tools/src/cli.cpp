#include "cli.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <ostream>
#include <sstream>

#include "curvforge/curvature.hpp"
#include "curvforge/error.hpp"
#include "curvforge/io.hpp"
#include "curvforge/jacobi_family.hpp"
#include "curvforge/osserman.hpp"

namespace curvforge::cli {

using io::Json;

namespace {

constexpr std::array<std::pair<Subcommand, std::string_view>, 8> kNames{{
    {Subcommand::verify_tensor, "verify-tensor"},
    {Subcommand::jacobi, "jacobi"},
    {Subcommand::reconstruct, "reconstruct"},
    {Subcommand::osserman_check, "osserman-check"},
    {Subcommand::clifford_build, "clifford-build"},
    {Subcommand::substitute, "substitute"},
    {Subcommand::proportionality_check, "proportionality-check"},
    {Subcommand::demo_counterexample, "demo-counterexample"},
}};

struct Outcome {
  int code;
  Json report;
};

std::string replay_command(const RunConfig& cfg) {
  std::ostringstream s;
  s << "curvforge " << to_string(cfg.subcommand);
  for (const auto& in : cfg.inputs) s << ' ' << in;
  if (cfg.subcommand == Subcommand::demo_counterexample) s << " --dim " << cfg.dim;
  if (cfg.vector) s << " --vector '" << *cfg.vector << "'";
  if (cfg.mu) s << " --mu '" << *cfg.mu << "'";
  s << " --samples " << cfg.samples << " --seed " << cfg.seed << " --tol " << cfg.tol;
  if (cfg.exact_only) s << " --exact-only";
  if (cfg.allow_unsafe) s << " --allow-unsafe";
  return s.str();
}

const std::string& single_input(const RunConfig& cfg) {
  if (cfg.inputs.size() != 1) throw InputError("expected exactly one input file");
  return cfg.inputs.front();
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[') {
    const Json j = io::parse(text);
    if (!j.is_array()) throw InputError("expected a list");
    for (const auto& item : j) out.push_back(io::rational_from_json(item));
    return out;
  }
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    out.push_back(parse_rational(item));
  }
  if (out.empty()) throw InputError("empty list");
  return out;
}

SpectralOptions spectral_options(const RunConfig& cfg) {
  SpectralOptions opts;
  opts.tol = cfg.tol;
  opts.exact_only = cfg.exact_only;
  return opts;
}

std::string_view kind_name(VectorKind kind) {
  switch (kind) {
    case VectorKind::zero: return "zero";
    case VectorKind::null: return "null";
    case VectorKind::nonnull: return "nonnull";
  }
  return "";
}

std::string_view error_type(const std::exception& e) {
  if (dynamic_cast<const AxiomRejection*>(&e)) return "axiom_rejection";
  if (dynamic_cast<const InputError*>(&e)) return "input";
  if (dynamic_cast<const PreconditionError*>(&e)) return "precondition";
  if (dynamic_cast<const DomainError*>(&e)) return "domain";
  if (dynamic_cast<const StructureError*>(&e)) return "structure";
  if (dynamic_cast<const UnsupportedError*>(&e)) return "unsupported";
  if (dynamic_cast<const InternalError*>(&e)) return "internal";
  return "unknown";
}

Json rejection_json(const AxiomRejection& e) {
  return Json{{"rejected", true},
              {"hypothesis", to_string(e.axiom())},
              {"identity", identity_of(e.axiom())},
              {"message", e.what()},
              {"axioms", io::to_json(e.report())}};
}

Outcome verify_tensor(const RunConfig& cfg) {
  const CurvatureTensor r = io::tensor_from_json(io::read_file(single_input(cfg)));
  const SymmetryReport report = verify_symmetries(r);
  return {report.verified() ? kExitOk : kExitViolated,
          Json{{"dim", r.dim()}, {"symmetries", io::to_json(report)}}};
}

Outcome jacobi(const RunConfig& cfg) {
  const CurvatureTensor r = io::tensor_from_json(io::read_file(single_input(cfg)));
  if (!cfg.vector) throw InputError("--vector is required");
  const Vector x(parse_list(*cfg.vector));
  require_dim(r.space(), x);
  const Endomorphism jx = jacobi_operator(r, x);
  const VectorKind kind = r.space().classify(x);
  Json report{{"x", io::to_json(x)},
              {"epsilon", io::to_json(r.space().squared_norm(x))},
              {"kind", kind_name(kind)},
              {"tensor_verified", r.verified()},
              {"jacobi", io::to_json(jx)},
              {"self_adjoint", is_self_adjoint(r.space(), jx)},
              {"annihilates_x", (jx * x).is_zero()}};
  if (kind == VectorKind::nonnull) {
    report["reduced_char_poly"] = io::to_json(reduced_char_poly(r, x));
    report["spectrum"] = io::to_json(spectral_decomposition(r, x, spectral_options(cfg)));
  }
  return {kExitOk, report};
}

Outcome reconstruct_family(const RunConfig& cfg) {
  const JacobiFamily family = io::family_from_json(io::read_file(single_input(cfg)));
  if (!family.closed_form()) {
    throw PreconditionError("table families support verification only, not reconstruction");
  }
  const AxiomReport axioms = run_axiom_suite(family, cfg.samples, cfg.seed);
  Json report{{"family", to_string(family.provenance())},
              {"domain", to_string(family.domain())},
              {"unsafe", cfg.allow_unsafe},
              {"axioms", io::to_json(axioms)}};
  if (const auto failed = axioms.first_failure(); failed && !cfg.allow_unsafe) {
    throw AxiomRejection(*failed, axioms);
  }
  const JacobiFamily total =
      family.domain() == FamilyDomain::total ? family : totalize(family, NullExtensionMode::verify);
  ReconstructOptions opts;
  opts.enforce_axioms = !cfg.allow_unsafe;
  opts.sample_budget = cfg.samples;
  opts.seed = cfg.seed;
  const CurvatureTensor r = reconstruct(total, opts);
  const auto samples = make_samples(family.space(), family.domain(), cfg.samples, cfg.seed);
  const auto mismatches = jacobi_mismatches(r, family, samples.vectors);
  report["tensor"] = io::to_json(r);
  report["tensor_verified"] = r.verified();
  report["jacobi_mismatches"] = mismatches.size();
  const bool ok = axioms.all_ok() && mismatches.empty() && r.verified();
  return {ok ? kExitOk : kExitViolated, report};
}

Outcome osserman_check(const RunConfig& cfg) {
  const CurvatureTensor r = io::tensor_from_json(io::read_file(single_input(cfg)));
  const OssermanVerdict verdict = is_osserman(r, cfg.samples, cfg.seed);
  return {verdict.is_osserman ? kExitOk : kExitViolated,
          Json{{"tensor_verified", r.verified()}, {"verdict", io::to_json(verdict)}}};
}

Outcome clifford_build(const RunConfig& cfg) {
  const CliffordSpec spec = io::clifford_spec_from_json(io::read_file(single_input(cfg)));
  try {
    validate(spec);
  } catch (const StructureError& e) {
    throw InputError(std::string("invalid Clifford spec: ") + e.what());
  }
  const CurvatureTensor r = build_clifford(spec);
  const JacobiFamily family = clifford_family(spec);
  const auto samples = make_samples(spec.space, FamilyDomain::total, cfg.samples, cfg.seed);
  const std::size_t mismatches = jacobi_mismatches(r, family, samples.vectors).size();
  const OssermanVerdict verdict = is_osserman(r, cfg.samples, cfg.seed);
  const bool ok = r.verified() && mismatches == 0 && verdict.is_osserman;
  return {ok ? kExitOk : kExitViolated,
          Json{{"spec", io::to_json(spec)},
               {"tensor", io::to_json(r)},
               {"tensor_verified", r.verified()},
               {"closed_form_mismatches", mismatches},
               {"verdict", io::to_json(verdict)}}};
}

Outcome substitute(const RunConfig& cfg) {
  const CurvatureTensor r = io::tensor_from_json(io::read_file(single_input(cfg)));
  if (!cfg.mu) throw InputError("--mu is required");
  const std::vector<Rational> mu = parse_list(*cfg.mu);
  SubstitutionOptions opts;
  opts.samples = cfg.samples;
  opts.seed = cfg.seed;
  std::optional<JacobiFamily> family;
  try {
    family = eigen_substitute(r, mu, opts);
  } catch (const PreconditionError& e) {
    return {kExitViolated, Json{{"hypothesis_failed", e.what()}}};
  }
  const OssermanVerdict before = is_osserman(r, cfg.samples, cfg.seed);
  const CurvatureTensor result = reconstruct(totalize(*family, NullExtensionMode::verify),
                                             {true, cfg.samples, cfg.seed});
  const OssermanVerdict after = is_osserman(result, cfg.samples, cfg.seed);

  // Expected normalized characteristic polynomial λ·Π(λ − μ_i)^{ν_i}.
  SpectralOptions exact;
  exact.exact_only = true;
  const SpectralDecomposition d =
      spectral_decomposition(r, make_samples(r.space(), FamilyDomain::nonnull_only, 1, cfg.seed)
                                    .vectors.front(),
                             exact);
  Polynomial expected = Polynomial::linear_factor(0);
  Json eigen = Json::array();
  for (std::size_t i = 0; i < d.k(); ++i) {
    for (int m = 0; m < d.eigenspaces[i].multiplicity; ++m) {
      expected = expected * Polynomial::linear_factor(mu[i]);
    }
    eigen.push_back({{"before", io::to_json(*d.eigenspaces[i].value)},
                     {"after", io::to_json(mu[i])},
                     {"multiplicity", d.eigenspaces[i].multiplicity}});
  }
  const bool matches = after.is_osserman && after.reference_char_poly == expected;
  const bool ok = result.verified() && matches;
  return {ok ? kExitOk : kExitViolated,
          Json{{"eigenvalues", eigen},
               {"before", io::to_json(before)},
               {"after", io::to_json(after)},
               {"expected_char_poly", io::to_json(expected)},
               {"char_poly_matches", matches},
               {"tensor", io::to_json(result)},
               {"tensor_verified", result.verified()}}};
}

Outcome proportionality_check(const RunConfig& cfg) {
  const CurvatureTensor r = io::tensor_from_json(io::read_file(single_input(cfg)));
  const auto pairs = sample_pairs(r.space(), cfg.samples, cfg.seed);
  try {
    const ProportionalityReport report = check_proportionality(r, pairs, spectral_options(cfg));
    return {report.holds ? kExitOk : kExitViolated, Json{{"proportionality", io::to_json(report)}}};
  } catch (const StructureError& e) {
    return {kExitViolated, Json{{"holds", false}, {"reason", e.what()}}};
  } catch (const PreconditionError& e) {
    return {kExitViolated, Json{{"holds", false}, {"reason", e.what()}}};
  }
}

Outcome demo_counterexample(const RunConfig& cfg) {
  if (cfg.dim < 2) throw InputError("--dim must be at least 2");
  const ScalarProduct g = ScalarProduct::euclidean(cfg.dim);
  const JacobiFamily family = JacobiFamily::epsilon_identity(g);
  const AxiomReport axioms = run_axiom_suite(family, cfg.samples, cfg.seed);
  const AxiomReport at_e1 = check_annihilation(family, {Vector::basis(cfg.dim, 0)});
  Json report{{"family", "epsilon_id"},
              {"dim", cfg.dim},
              {"self_adjoint", axioms.self_adjoint_ok},
              {"compatibility", axioms.compatible_ok},
              {"annihilation", axioms.annihilation_ok},
              {"witness", at_e1.witnesses.empty() ? Json(nullptr) : io::to_json(at_e1.witnesses[0])}};
  ReconstructOptions opts;
  opts.enforce_axioms = !cfg.allow_unsafe;
  opts.sample_budget = cfg.samples;
  opts.seed = cfg.seed;
  const JacobiFamily total = totalize(family, NullExtensionMode::verify);
  try {
    const CurvatureTensor r = reconstruct(total, opts);
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < cfg.dim; ++i) basis.push_back(Vector::basis(cfg.dim, i));
    report["rejected"] = false;
    report["unsafe"] = true;
    report["tensor"] = io::to_json(r);
    report["jacobi_mismatches_on_basis"] = jacobi_mismatches(r, family, basis).size();
  } catch (const AxiomRejection& e) {
    report.update(rejection_json(e));
  }
  return {kExitViolated, report};
}

Outcome dispatch(const RunConfig& cfg) {
  switch (cfg.subcommand) {
    case Subcommand::verify_tensor: return verify_tensor(cfg);
    case Subcommand::jacobi: return jacobi(cfg);
    case Subcommand::reconstruct: return reconstruct_family(cfg);
    case Subcommand::osserman_check: return osserman_check(cfg);
    case Subcommand::clifford_build: return clifford_build(cfg);
    case Subcommand::substitute: return substitute(cfg);
    case Subcommand::proportionality_check: return proportionality_check(cfg);
    case Subcommand::demo_counterexample: return demo_counterexample(cfg);
  }
  throw InputError("unknown subcommand");
}

Outcome error_outcome(int code, const std::exception& e) {
  return {code, Json{{"error", {{"type", error_type(e)}, {"message", e.what()}}}}};
}

}  // namespace

std::string_view to_string(Subcommand s) {
  for (const auto& [kind, name] : kNames) {
    if (kind == s) return name;
  }
  return "";
}

std::optional<Subcommand> subcommand_from_string(std::string_view name) {
  for (const auto& [kind, n] : kNames) {
    if (n == name) return kind;
  }
  return std::nullopt;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Outcome outcome{kExitUsage, {}};
  try {
    outcome = dispatch(cfg);
  } catch (const AxiomRejection& e) {
    outcome = {kExitViolated, rejection_json(e)};
  } catch (const StructureError& e) {
    outcome = error_outcome(kExitViolated, e);
  } catch (const DomainError& e) {
    outcome = error_outcome(kExitViolated, e);
  } catch (const std::exception& e) {
    outcome = error_outcome(kExitUsage, e);
  }
  if (outcome.report.contains("error")) {
    err << "curvforge: " << outcome.report["error"]["message"].get<std::string>() << "\n";
  }
  Json report{{"command", to_string(cfg.subcommand)},
              {"seed", cfg.seed},
              {"samples", cfg.samples},
              {"replay", replay_command(cfg)},
              {"exit_code", outcome.code}};
  report.update(outcome.report);
  const std::string text = io::dump(report);
  if (cfg.output) {
    std::ofstream file(*cfg.output, std::ios::binary);
    if (!file) {
      err << "curvforge: cannot write " << *cfg.output << "\n";
      return kExitUsage;
    }
    file << text;
  } else {
    out << text;
  }
  return outcome.code;
}

}  // namespace curvforge::cli
