#include "dweights/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "dweights/errors.hpp"
#include "dweights/rational_fit.hpp"
#include "dweights/verification.hpp"

namespace dweights::cli {

namespace {

int display_decimals(ModelKind kind) { return kind == ModelKind::kChebyshevModified ? 6 : 8; }

std::string csv_number(double v) { return fmt::format("{:.17g}", v); }

void require(bool cond, const std::string& message) {
  if (!cond) throw PreconditionError(message);
}

void validate_common(const RunConfig& config) {
  require(config.n >= 2, fmt::format("--N must be >= 2, got {}", config.n));
  if (config.model == ModelKind::kPartialWaveKE) {
    require(config.ell >= 0, "--ell must be non-negative");
    require(config.lambda > 0.0, "--lambda must be positive");
  } else {
    require(config.b != 0.0, "--B must be nonzero");
  }
}

}  // namespace

ModelProblem make_model(const RunConfig& config) {
  return config.model == ModelKind::kChebyshevModified ? ModelProblem::chebyshev_modified(config.a, config.b)
                                                       : ModelProblem::partial_wave(config.ell, config.lambda);
}

std::vector<Method> parse_methods(const std::string& list, ModelKind model) {
  std::vector<Method> methods;
  if (list == "all") {
    for (const auto m : kAllMethods) {
      if (m == Method::kBroad && model != ModelKind::kChebyshevModified) continue;
      methods.push_back(m);
    }
    return methods;
  }
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto m = parse_method(item);
    require(m.has_value(), fmt::format("unknown method '{}' (expected heller, broad, jmatrix-interp, "
                                       "jmatrix-exact, oracle or all)",
                                       item));
    if (std::find(methods.begin(), methods.end(), *m) == methods.end()) methods.push_back(*m);
  }
  require(!methods.empty(), "--methods must name at least one method");
  return methods;
}

int cmd_weights(const RunConfig& config, std::ostream& out) {
  validate_common(config);
  require(!config.methods.empty(), "--methods must name at least one method");
  const Discretization disc(make_model(config), config.n);
  const auto table = compute_weights(disc, config.methods, config.knots);

  if (config.format == OutputFormat::kCsv) {
    out << "mu,energy";
    for (const auto& c : table.columns) out << ',' << to_string(c.method);
    out << '\n';
    for (std::size_t mu = 0; mu < table.energies.size(); ++mu) {
      out << mu << ',' << csv_number(table.energies[mu]);
      for (const auto& c : table.columns) out << ',' << csv_number(c.values[mu]);
      out << '\n';
    }
    return kExitOk;
  }

  const int decimals = display_decimals(config.model);
  const int width = std::max<int>(decimals + 6, 15);
  fmt::print(out, "{:>3} {:>{}}", "mu", "energy", width);
  for (const auto& c : table.columns) fmt::print(out, " {:>{}}", to_string(c.method), width);
  out << '\n';
  for (std::size_t mu = 0; mu < table.energies.size(); ++mu) {
    fmt::print(out, "{:>3} {:>{}.{}f}", mu, table.energies[mu], width, decimals);
    for (const auto& c : table.columns) fmt::print(out, " {:>{}.{}f}", c.values[mu], width, decimals);
    out << '\n';
  }
  return kExitOk;
}

int cmd_zeta_curve(const RunConfig& config, std::ostream& out) {
  validate_common(config);
  require(config.model == ModelKind::kChebyshevModified, "zeta-curve: only the chebyshev-mod model is supported");
  require(config.n >= 3, "zeta-curve: --N must be >= 3");
  require(config.grid >= 100, fmt::format("--grid must be >= 100, got {}", config.grid));

  const Discretization disc(make_model(config), config.n);
  const auto used = jmatrix_knots(disc, config.knots);
  const auto fit = RationalFit::fit(used);
  const auto all = jmatrix_knots(disc, KnotSelection::kAll);

  out << "kind,x,zeta,dzeta_dx,dzeta_display,in_fit\n";
  auto row = [&](std::string_view kind, double x, double zeta, bool in_fit) {
    const auto vs = fit.eval_deriv(x);
    out << kind << ',' << csv_number(x) << ',' << csv_number(zeta) << ',' << csv_number(vs.slope) << ','
        << csv_number(10.0 * vs.slope - 1.5) << ',' << (in_fit ? 1 : 0) << '\n';
  };
  const double top = static_cast<double>(config.n - 1);
  for (std::size_t i = 0; i < config.grid; ++i) {
    const double x = top * static_cast<double>(i) / static_cast<double>(config.grid - 1);
    row("curve", x, fit.eval(x), true);
  }
  const auto used_knots = used.knots();
  for (const auto& k : all.knots()) {
    const bool integer = k.x == std::floor(k.x);
    const bool in_fit = std::any_of(used_knots.begin(), used_knots.end(),
                                    [&](const Knot& u) { return u.x == k.x && u.energy == k.energy; });
    row(integer ? "eigen" : "tilde", k.x, k.energy, in_fit);
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  const auto results = config.check.empty() ? run_all_checks() : run_check(config.check);
  bool all_ok = true;
  for (const auto& r : results) {
    fmt::print(out, "{}: {}  {}\n", r.name, r.passed ? "PASS" : "FAIL", r.detail);
    all_ok = all_ok && r.passed;
  }
  fmt::print(out, "{} of {} checks passed\n",
             std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; }),
             results.size());
  return all_ok ? kExitOk : kExitNumerical;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Derivative weights for discretized continuous spectra"};
  app.require_subcommand(1);

  RunConfig config;
  std::string model_name = "chebyshev-mod";
  std::string methods = "all";
  std::string format = "table";
  std::string knots = "drop-last";

  auto add_model_flags = [&](CLI::App* sub) {
    sub->add_option("--model", model_name, "chebyshev-mod or pwke")
        ->check(CLI::IsMember({"chebyshev-mod", "pwke"}));
    sub->add_option("--A", config.a, "diagonal entry A (chebyshev-mod)");
    sub->add_option("--B", config.b, "first off-diagonal entry B (chebyshev-mod)");
    sub->add_option("--ell", config.ell, "partial wave l (pwke)");
    sub->add_option("--lambda", config.lambda, "basis scale lambda (pwke)");
    sub->add_option("--N", config.n, "matrix size");
    sub->add_option("--knots", knots, "extra knots in interpolation fits: drop-last or all")
        ->check(CLI::IsMember({"drop-last", "all"}));
    sub->add_option("--out", config.out_path, "write output to this file");
  };

  auto* weights = app.add_subcommand("weights", "tabulate derivative weights");
  add_model_flags(weights);
  weights->add_option("--methods", methods, "comma list of heller,broad,jmatrix-interp,jmatrix-exact,oracle or all");
  weights->add_option("--format", format, "table or csv")->check(CLI::IsMember({"table", "csv"}));

  auto* curve = app.add_subcommand("zeta-curve", "zeta(x) and dzeta/dx from the J-matrix knot fit (CSV)");
  add_model_flags(curve);
  curve->add_option("--grid", config.grid, "number of curve samples (>= 100)");

  auto* verify = app.add_subcommand("verify", "run the verification checks");
  verify->add_option("--check", config.check, "run a single check")->check(CLI::IsMember(check_names()));
  verify->add_option("--out", config.out_path, "write the report to this file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    config.model = model_name == "pwke" ? ModelKind::kPartialWaveKE : ModelKind::kChebyshevModified;
    config.format = format == "csv" ? OutputFormat::kCsv : OutputFormat::kTable;
    config.knots = *parse_knot_selection(knots);
    if (weights->parsed()) config.methods = parse_methods(methods, config.model);

    std::ofstream file;
    if (!config.out_path.empty()) {
      file.open(config.out_path);
      require(file.is_open(), fmt::format("cannot open '{}' for writing", config.out_path));
    }
    std::ostream& sink = config.out_path.empty() ? out : file;

    int status = kExitOk;
    if (weights->parsed()) status = cmd_weights(config, sink);
    if (curve->parsed()) status = cmd_zeta_curve(config, sink);
    if (verify->parsed()) status = cmd_verify(config, sink);
    return status;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace dweights::cli
