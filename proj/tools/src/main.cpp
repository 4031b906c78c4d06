#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

using curvforge::cli::RunConfig;
using curvforge::cli::Subcommand;

int main(int argc, char** argv) {
  CLI::App app{"Exact curvature-tensor reconstruction and Osserman tooling", "curvforge"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;

  const std::vector<std::pair<Subcommand, std::string>> commands{
      {Subcommand::verify_tensor, "Check the curvature symmetries of a tensor"},
      {Subcommand::jacobi, "Print the Jacobi operator J_X of a tensor"},
      {Subcommand::reconstruct, "Rebuild a curvature tensor from a Jacobi family"},
      {Subcommand::osserman_check, "Sample the Osserman property of a tensor"},
      {Subcommand::clifford_build, "Build and check a Clifford curvature tensor"},
      {Subcommand::substitute, "Replace the eigenvalues of an Osserman tensor"},
      {Subcommand::proportionality_check, "Sample the Jacobi-proportionality condition"},
      {Subcommand::demo_counterexample, "Show why K_X X = 0 is required"},
  };
  std::vector<std::pair<CLI::App*, Subcommand>> subs;
  for (const auto& [kind, help] : commands) {
    CLI::App* sub = app.add_subcommand(std::string(curvforge::cli::to_string(kind)), help);
    if (kind != Subcommand::demo_counterexample) {
      sub->add_option("input", cfg.inputs, "Input JSON file")->required();
    }
    subs.emplace_back(sub, kind);
  }
  app.add_option("--samples", cfg.samples, "Random samples per check")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Sampling seed")->capture_default_str();
  app.add_option("--tol", cfg.tol, "Floating-point eigenvalue tolerance")->capture_default_str();
  app.add_flag("--exact-only", cfg.exact_only, "Refuse floating-point fallbacks");
  app.add_flag("--allow-unsafe", cfg.allow_unsafe, "Skip the axiom gate (demonstration only)");
  app.add_option("--output,-o", cfg.output, "Write the report here instead of stdout");
  app.add_option("--dim", cfg.dim, "Dimension for demo-counterexample")->capture_default_str();
  app.add_option("--vector", cfg.vector, "Vector X, e.g. \"1,0,1/2\"");
  app.add_option("--mu", cfg.mu, "Replacement eigenvalues, e.g. \"1,-2\"");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return curvforge::cli::kExitUsage;
  }
  for (const auto& [sub, kind] : subs) {
    if (sub->parsed()) cfg.subcommand = kind;
  }
  return curvforge::cli::run(cfg, std::cout, std::cerr);
}
