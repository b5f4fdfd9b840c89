#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dweights/models.hpp"
#include "dweights/weights.hpp"

namespace dweights::cli {

enum class OutputFormat { kTable, kCsv };

struct RunConfig {
  ModelKind model = ModelKind::kChebyshevModified;
  double a = 1.0 / 3.0;
  double b = 1.0 / 3.0;
  int ell = 1;
  double lambda = 1.3;
  std::size_t n = 10;
  std::vector<Method> methods;
  KnotSelection knots = KnotSelection::kDropLastExtra;
  OutputFormat format = OutputFormat::kTable;
  std::string out_path;  // empty: standard output
  std::size_t grid = 400;
  std::string check;  // empty: every check
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitUsage = 2;

[[nodiscard]] ModelProblem make_model(const RunConfig& config);

/// Parse a comma-separated method list; "all" selects every method the
/// model supports. Throws PreconditionError on unknown names.
[[nodiscard]] std::vector<Method> parse_methods(const std::string& list, ModelKind model);

/// One row per eigenvalue: mu, energy, then each requested method.
/// Table output uses 6 decimals for the chebyshev model and 8 for the
/// partial-wave model; CSV carries 17 significant digits.
int cmd_weights(const RunConfig& config, std::ostream& out);

/// CSV of zeta(x) and dzeta/dx from the J-matrix knot fit on a grid over
/// [0, N-1], followed by the knot rows.
int cmd_zeta_curve(const RunConfig& config, std::ostream& out);

/// Runs the verification checks (all, or config.check). Returns 0 iff every
/// line passes.
int cmd_verify(const RunConfig& config, std::ostream& out);

/// Full command-line entry point: parses args (without the program name),
/// dispatches, and maps failures to exit codes (1 numerical, 2 usage).
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace dweights::cli
