#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace curvforge::cli {

enum class Subcommand {
  verify_tensor,
  jacobi,
  reconstruct,
  osserman_check,
  clifford_build,
  substitute,
  proportionality_check,
  demo_counterexample,
};

std::string_view to_string(Subcommand s);
std::optional<Subcommand> subcommand_from_string(std::string_view name);

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Subcommand subcommand = Subcommand::verify_tensor;
  std::vector<std::string> inputs;
  std::size_t samples = 32;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  bool exact_only = false;
  bool allow_unsafe = false;
  std::optional<std::string> output;
  /// demo-counterexample
  std::size_t dim = 3;
  /// jacobi: "1,0,1/2" or a JSON array
  std::optional<std::string> vector;
  /// substitute: "a,b,..." or a JSON array
  std::optional<std::string> mu;
};

/// Executes one subcommand. The JSON report goes to `out` (or to
/// cfg.output), diagnostics to `err`. Returns 0 when the property holds,
/// 1 when it is violated, 2 on input or usage errors.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace curvforge::cli
