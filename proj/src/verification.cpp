#include "dweights/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include <fmt/format.h>

#include "dweights/errors.hpp"
#include "dweights/golden.hpp"
#include "dweights/models.hpp"
#include "dweights/rational_fit.hpp"
#include "dweights/weights.hpp"

namespace dweights {

namespace {

using std::numbers::pi;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Counts comparisons and remembers the worst one.
struct Tally {
  int total = 0;
  int failed = 0;
  double worst = 0.0;
  std::string worst_where;

  void compare(double got, double want, double tol, const std::string& where) {
    const double dev = std::abs(got - want);
    ++total;
    if (!(dev <= tol)) ++failed;
    if (!(dev <= worst) || worst_where.empty()) {
      worst = dev;
      worst_where = where;
    }
  }
  void relative(double got, double want, double tol, const std::string& where) {
    const double dev = std::abs(got - want) / std::abs(want);
    ++total;
    if (!(dev <= tol)) ++failed;
    if (!(dev <= worst) || worst_where.empty()) {
      worst = dev;
      worst_where = where;
    }
  }
  [[nodiscard]] bool ok() const { return failed == 0 && total > 0; }
  [[nodiscard]] std::string summary() const {
    return fmt::format("{}/{} within tolerance, worst {:.3e} at {}", total - failed, total, worst, worst_where);
  }
};

ModelProblem table1_model() { return ModelProblem::chebyshev_modified(golden::kTable1A, golden::kTable1B); }
ModelProblem table2_model() { return ModelProblem::partial_wave(golden::kTable2Ell, golden::kTable2Lambda); }

std::vector<CheckResult> check_table1() {
  const auto start = Clock::now();
  const Discretization disc(table1_model(), golden::kTable1N);
  const auto table = compute_weights(disc, kAllMethods);
  const double elapsed = seconds_since(start);

  Tally cells;
  for (std::size_t mu = 0; mu < golden::kTable1.size(); ++mu) {
    const auto& row = golden::kTable1[mu];
    const double interp_tol = mu <= 7 ? 1e-5 : 5e-4;
    cells.compare(table.energies[mu], row.energy, 1e-6, fmt::format("energy mu={}", mu));
    cells.compare(table.column(Method::kHeller)[mu], row.heller, interp_tol, fmt::format("heller mu={}", mu));
    cells.compare(table.column(Method::kBroad)[mu], row.broad, interp_tol, fmt::format("broad mu={}", mu));
    cells.compare(table.column(Method::kJMatrixInterp)[mu], row.jmatrix_interp, interp_tol,
                  fmt::format("jmatrix-interp mu={}", mu));
    cells.compare(table.column(Method::kJMatrixExact)[mu], row.jmatrix_exact, 1e-6,
                  fmt::format("jmatrix-exact mu={}", mu));
    cells.compare(table.column(Method::kOracle)[mu], row.exact, 1e-6, fmt::format("exact mu={}", mu));
  }

  // Edge rows with every extra knot kept, for comparison.
  const auto broad_all = broad_weights(disc, KnotSelection::kAll);
  const auto interp_all = jmatrix_interp_weights(disc, KnotSelection::kAll);
  const std::string edges =
      fmt::format("all-knot fit: broad mu=8,9 = {:.6f}, {:.6f}; jmatrix-interp mu=8,9 = {:.6f}, {:.6f}", broad_all[8],
                  broad_all[9], interp_all[8], interp_all[9]);

  return {
      {"table1 cells", cells.ok(), cells.summary()},
      {"table1 runtime", elapsed < 1.0, fmt::format("{:.4f} s (limit 1 s)", elapsed)},
      {"table1 edge rows", true, edges},
  };
}

std::vector<CheckResult> check_table2() {
  const auto start = Clock::now();
  const Discretization disc(table2_model(), golden::kTable2N);
  const Method methods[] = {Method::kHeller, Method::kJMatrixExact, Method::kOracle};
  const auto table = compute_weights(disc, methods);
  const double elapsed = seconds_since(start);

  Tally energies, closed, heller;
  for (std::size_t mu = 0; mu < golden::kTable2.size(); ++mu) {
    const auto& row = golden::kTable2[mu];
    energies.compare(table.energies[mu], row.energy, 1e-8, fmt::format("mu={}", mu));
    closed.compare(table.column(Method::kJMatrixExact)[mu], row.jmatrix_exact, 1e-7,
                   fmt::format("jmatrix-exact mu={}", mu));
    closed.compare(table.column(Method::kOracle)[mu], row.exact, 1e-7, fmt::format("exact mu={}", mu));
    heller.compare(table.column(Method::kHeller)[mu], row.heller, 1e-4, fmt::format("mu={}", mu));
  }
  std::string heller_detail = heller.summary();
  if (!heller.ok()) {
    heller_detail += fmt::format(" (computed mu=4: {:.8f})", table.column(Method::kHeller)[4]);
  }
  return {
      {"table2 eigenvalues", energies.ok(),
       energies.summary() + fmt::format(" (lambda={}, computed mu=4: {:.10f})", golden::kTable2Lambda,
                                        table.energies[4])},
      {"table2 jmatrix-exact/exact", closed.ok(), closed.summary()},
      {"table2 heller", heller.ok(), heller_detail},
      {"table2 runtime", elapsed < 1.0, fmt::format("{:.4f} s (limit 1 s)", elapsed)},
  };
}

std::vector<CheckResult> check_oracle_equivalence() {
  const auto start = Clock::now();
  std::vector<CheckResult> out;
  const std::pair<const char*, ModelProblem> models[] = {{"model1", table1_model()}, {"model2", table2_model()}};
  for (const auto& [label, model] : models) {
    Tally rel;
    for (std::size_t n = 2; n <= 20; ++n) {
      const Discretization disc(model, n);
      const auto exact = jmatrix_exact_weights(disc);
      const auto oracle = exact_derivative_weights(disc);
      for (std::size_t mu = 0; mu < n; ++mu) rel.relative(exact[mu], oracle[mu], 1e-10, fmt::format("N={} mu={}", n, mu));
    }
    out.push_back({fmt::format("oracle-equivalence {} N=2..20", label), rel.ok(), rel.summary()});
  }
  const double elapsed = seconds_since(start);
  out.push_back({"oracle-equivalence runtime", elapsed < 5.0, fmt::format("{:.4f} s (limit 5 s)", elapsed)});
  return out;
}

std::vector<CheckResult> check_chebyshev_closed_form() {
  // rho(x) = sqrt(1 - x^2), zeroth moment pi/2.
  const auto model = ModelProblem::chebyshev_modified(0.0, 0.5, pi / 2.0);
  Tally eig, gauss, exact;
  for (std::size_t n : {3u, 10u, 25u}) {
    const Discretization disc(model, n);
    const auto nodes = quadrature_weights(disc);
    const auto jm = jmatrix_exact_weights(disc);
    const double h = pi / static_cast<double>(n + 1);
    for (std::size_t mu = 0; mu < n; ++mu) {
      const double theta = static_cast<double>(mu + 1) * h;
      const auto where = fmt::format("N={} mu={}", n, mu);
      eig.compare(nodes[mu].energy, -std::cos(theta), 1e-12, where);
      gauss.compare(nodes[mu].weight, h * std::sin(theta) * std::sin(theta), 1e-12, where);
      exact.compare(jm[mu], h * std::sin(theta), 1e-12, where);
    }
  }
  return {
      {"chebyshev-closed-form eigenvalues", eig.ok(), eig.summary()},
      {"chebyshev-closed-form gauss weights", gauss.ok(), gauss.summary()},
      {"chebyshev-closed-form jmatrix-exact", exact.ok(), exact.summary()},
  };
}

std::vector<CheckResult> check_green_equivalence() {
  const auto model = table1_model();
  std::vector<CheckResult> out;
  for (std::size_t n : {2u, 5u, 10u}) {
    const Discretization disc(model, n);
    Tally t;
    for (int k = 0; k < 99; ++k) {
      const double e = -0.95 + 1.9 * (k + 1) / 100.0;
      const auto assembled = assemble_green00(disc, e);
      const auto exact = green00_exact(model, e);
      const double tol = 1e-10 * std::max(1.0, std::abs(exact));
      t.compare(std::abs(assembled - exact), 0.0, tol, fmt::format("e={:.4f}", e));
    }
    out.push_back({fmt::format("green-equivalence N={}", n), t.ok(), t.summary()});
  }
  return out;
}

std::vector<CheckResult> check_properties() {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(20240611);

  {
    // Parameters are drawn from |A| <= 1 - 2B^2, where the spectrum has no
    // bound states. A bound state localized near n = 0 moves by O(q^(2N)) when
    // the last row is dropped, which is below double resolution.
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_int_distribution<int> size(3, 30);
    int good = 0;
    std::string first_bad;
    for (int trial = 0; trial < 50; ++trial) {
      double b = unit(rng) / std::sqrt(2.0);
      if (std::abs(b) < 1e-3) b = 1e-3;
      const double a = unit(rng) * (1.0 - 2.0 * b * b);
      const auto n = static_cast<std::size_t>(size(rng));
      const auto h = build_hamiltonian(ModelProblem::chebyshev_modified(a, b), n);
      const auto e = eigenvalues(h);
      if (interlace_check(e, eigenvalues(drop_first(h))) && interlace_check(e, eigenvalues(drop_last(h)))) {
        ++good;
      } else if (first_bad.empty()) {
        first_bad = fmt::format(" (first failure A={} B={} N={})", a, b, n);
      }
    }
    out.push_back({"properties interlacing", good == 50, fmt::format("{}/50 random instances{}", good, first_bad)});
  }

  {
    const Discretization disc(table1_model(), golden::kTable1N);
    const auto eig = disc.eigenvalues();
    Tally hits;
    for (std::size_t mu = 0; mu < eig.size(); ++mu) {
      for (double offset : {0.0, -1e-10, 1e-10}) {
        hits.compare(zeta_inverse_direct(disc, eig[mu] + offset), static_cast<double>(mu), 1e-8,
                     fmt::format("mu={} offset={:g}", mu, offset));
      }
    }
    out.push_back({"properties zeta-inverse integers", hits.ok(), hits.summary()});

    const double lo = eig.front();
    const double hi = eig.back();
    constexpr int kGrid = 1000;
    double prev = -std::numeric_limits<double>::infinity();
    int violations = 0;
    for (int i = 1; i <= kGrid; ++i) {
      const double e = lo + (hi - lo) * i / (kGrid + 1.0);
      const double x = zeta_inverse_direct(disc, e);
      if (!(x > prev)) ++violations;
      prev = x;
    }
    out.push_back({"properties zeta-inverse monotone", violations == 0,
                   fmt::format("{} non-increasing steps on a {}-point grid", violations, kGrid)});

    Tally fd;
    const KnotSet sets[] = {heller_knots(eig), broad_knots(disc, KnotSelection::kDropLastExtra),
                            jmatrix_knots(disc, KnotSelection::kDropLastExtra)};
    const char* labels[] = {"heller", "broad", "jmatrix-interp"};
    constexpr double h = 1e-6;
    for (std::size_t s = 0; s < 3; ++s) {
      const auto fit = RationalFit::fit(sets[s]);
      const auto nodes = fit.nodes();
      std::uniform_real_distribution<double> where(nodes.front() + h, nodes.back() - h);
      for (int i = 0; i < 100; ++i) {
        const double x = where(rng);
        const double slope = fit.eval_deriv(x).slope;
        const double central = (fit.eval(x + h) - fit.eval(x - h)) / (2.0 * h);
        fd.relative(slope, central, 1e-5, fmt::format("{} x={:.6f}", labels[s], x));
      }
    }
    out.push_back({"properties schlessinger derivative", fd.ok(), fd.summary()});
  }

  {
    const auto model = table2_model();
    const auto h = build_hamiltonian(model, 8);
    Tally cas;
    for (double e : {0.3, 0.69089884, 2.5, 7.6, 12.7}) {
      double reference = 0.0;
      for (std::size_t n = 0; n <= 6; ++n) {
        const auto lo = wave_coefficients(model, n, e);
        const auto up = wave_coefficients(model, n + 1, e);
        const double w = h.off()[n] * (lo.s * up.c - up.s * lo.c);
        if (n == 0) {
          reference = w;
        } else {
          cas.relative(w, reference, 1e-10, fmt::format("e={} n={}", e, n));
        }
      }
    }
    out.push_back({"properties casoratian", cas.ok(), cas.summary()});
  }
  return out;
}

std::vector<CheckResult> check_accuracy_ordering() {
  const Discretization disc(table1_model(), golden::kTable1N);
  const auto table = compute_weights(disc, kAllMethods);
  const std::size_t mu = 9;
  const double exact = table.column(Method::kOracle)[mu];
  auto err = [&](Method m) { return std::abs(table.column(m)[mu] - exact); };
  const double h = err(Method::kHeller);
  const double b = err(Method::kBroad);
  const double i = err(Method::kJMatrixInterp);
  const double j = err(Method::kJMatrixExact);
  const bool ok = h > b && b > i && i > j;
  return {{"accuracy-ordering mu=9", ok,
           fmt::format("heller {:.3e} > broad {:.3e} > jmatrix-interp {:.3e} > jmatrix-exact {:.3e}", h, b, i, j)}};
}

struct NamedCheck {
  std::string name;
  std::function<std::vector<CheckResult>()> run;
};

const std::vector<NamedCheck>& registry() {
  static const std::vector<NamedCheck> checks = {
      {"table1", check_table1},
      {"table2", check_table2},
      {"oracle-equivalence", check_oracle_equivalence},
      {"chebyshev-closed-form", check_chebyshev_closed_form},
      {"green-equivalence", check_green_equivalence},
      {"properties", check_properties},
      {"accuracy-ordering", check_accuracy_ordering},
  };
  return checks;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& c : registry()) v.push_back(c.name);
    return v;
  }();
  return names;
}

std::vector<CheckResult> run_check(std::string_view name) {
  for (const auto& c : registry()) {
    if (c.name != name) continue;
    try {
      return c.run();
    } catch (const NumericalError& e) {
      return {{c.name, false, e.what()}};
    }
  }
  throw PreconditionError(fmt::format("unknown check '{}'", name));
}

std::vector<CheckResult> run_all_checks() {
  std::vector<CheckResult> all;
  for (const auto& name : check_names()) {
    auto part = run_check(name);
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return all;
}

}  // namespace dweights
