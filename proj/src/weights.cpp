#include "dweights/weights.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "dweights/errors.hpp"

namespace dweights {

namespace {

using std::numbers::pi;

constexpr double kPoleGap = 1e-12;
constexpr double kDeltaFloor = 1e-14;

void require_min_size(std::size_t n, std::size_t min, const char* what) {
  if (n < min) throw PreconditionError(fmt::format("{}: N must be >= {}, got {}", what, min, n));
}

// Merge the N eigenvalue knots (mu, e_mu) with the extra knots, which sit
// between consecutive eigenvalues.
KnotSet merge_knots(std::span<const double> eigenvalues, std::span<const double> extra_energies,
                    std::span<const double> extra_offsets, KnotSelection selection, const char* what) {
  if (!interlace_check(eigenvalues, extra_energies)) {
    throw NumericalError(NumericalErrorKind::kInterleave,
                         fmt::format("{}: submatrix eigenvalues do not interlace the spectrum", what));
  }
  std::size_t extras = extra_energies.size();
  if (selection == KnotSelection::kDropLastExtra) --extras;

  std::vector<Knot> knots;
  knots.reserve(eigenvalues.size() + extras);
  for (std::size_t mu = 0; mu < eigenvalues.size(); ++mu) {
    knots.push_back({static_cast<double>(mu), eigenvalues[mu]});
    if (mu < extras) knots.push_back({static_cast<double>(mu) + extra_offsets[mu], extra_energies[mu]});
  }
  return KnotSet(std::move(knots));
}

std::vector<double> slopes_at_integers(const KnotSet& knots, std::size_t n) {
  const auto fit = RationalFit::fit(knots);
  std::vector<double> w(n);
  for (std::size_t mu = 0; mu < n; ++mu) w[mu] = fit.eval_deriv(static_cast<double>(mu)).slope;
  return w;
}

}  // namespace

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::kHeller: return "heller";
    case Method::kBroad: return "broad";
    case Method::kJMatrixInterp: return "jmatrix-interp";
    case Method::kJMatrixExact: return "jmatrix-exact";
    case Method::kOracle: return "oracle";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
  for (const auto m : kAllMethods) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

std::string_view to_string(KnotSelection selection) noexcept {
  return selection == KnotSelection::kAll ? "all" : "drop-last";
}

std::optional<KnotSelection> parse_knot_selection(std::string_view name) noexcept {
  if (name == "all") return KnotSelection::kAll;
  if (name == "drop-last") return KnotSelection::kDropLastExtra;
  return std::nullopt;
}

Discretization::Discretization(ModelProblem model, std::size_t n)
    : model_(std::move(model)),
      n_(n),
      hamiltonian_(build_hamiltonian(model_, n)),
      eigen_(eigh(hamiltonian_)),
      coupling_(0.0) {
  require_min_size(n, 2, "Discretization");
  hat_ = dweights::eigenvalues(drop_first(hamiltonian_));
  tilde_ = dweights::eigenvalues(drop_last(hamiltonian_));
  coupling_ = j_coupling(model_, n);
}

double g_matrix_element(const EigenSystem& es, std::size_t n, std::size_t m, double energy) {
  const std::size_t size = es.size();
  if (n >= size || m >= size) throw PreconditionError("g_matrix_element: index out of range");
  double sum = 0.0;
  for (std::size_t mu = 0; mu < size; ++mu) {
    const double gap = es.values()[mu] - energy;
    if (std::abs(gap) < kPoleGap) {
      throw NumericalError(NumericalErrorKind::kPole,
                           fmt::format("g_{}{}: e={:.17g} sits on the pole e_{}", n, m, energy, mu));
    }
    sum += es.component(n, mu) * es.component(m, mu) / gap;
  }
  return sum;
}

GreenPieces green_pieces(const Discretization& disc, double energy) {
  const auto& es = disc.eigensystem();
  const std::size_t last = disc.size() - 1;
  GreenPieces p{};
  p.g00 = g_matrix_element(es, 0, 0, energy);
  p.g0n1 = g_matrix_element(es, 0, last, energy);
  p.gn1n1 = g_matrix_element(es, last, last, energy);
  p.rplus = r_plus(disc.model(), disc.size(), energy);
  p.delta = 1.0 + p.gn1n1 * disc.coupling() * p.rplus;
  return p;
}

std::complex<double> assemble_green00(const Discretization& disc, double energy) {
  const auto p = green_pieces(disc, energy);
  if (std::abs(p.delta) < kDeltaFloor) {
    throw NumericalError(NumericalErrorKind::kDegeneracy,
                         fmt::format("assemble_green00: |Delta_N^+| < {} at e={:.17g}", kDeltaFloor, energy));
  }
  return p.g00 - p.g0n1 * disc.coupling() * (p.rplus / p.delta) * p.g0n1;
}

std::complex<double> assemble_green00(const ModelProblem& model, std::size_t n, double energy) {
  return assemble_green00(Discretization(model, n), energy);
}

double upper_half_phase(std::complex<double> z) {
  double phase = std::atan2(z.imag(), z.real());
  if (phase < 0.0) phase += pi;
  if (!(phase >= 0.0 && phase <= pi)) {
    throw NumericalError(NumericalErrorKind::kBranch,
                         fmt::format("phase of ({:.17g}, {:.17g}) outside [0, pi]", z.real(), z.imag()));
  }
  return phase;
}

KnotSet heller_knots(std::span<const double> eigenvalues) {
  std::vector<Knot> knots;
  knots.reserve(eigenvalues.size());
  for (std::size_t mu = 0; mu < eigenvalues.size(); ++mu) knots.push_back({static_cast<double>(mu), eigenvalues[mu]});
  return KnotSet(std::move(knots));
}

KnotSet broad_knots(const Discretization& disc, KnotSelection selection) {
  if (disc.model().kind() != ModelKind::kChebyshevModified) {
    throw PreconditionError("broad: requires a model with a closed-form Green's function");
  }
  require_min_size(disc.size(), 3, "broad");
  const auto hat = disc.first_deleted();
  std::vector<double> offsets(hat.size());
  for (std::size_t nu = 0; nu < hat.size(); ++nu) {
    offsets[nu] = upper_half_phase(green00_exact(disc.model(), hat[nu])) / pi;
  }
  return merge_knots(disc.eigenvalues(), hat, offsets, selection, "broad");
}

KnotSet jmatrix_knots(const Discretization& disc, KnotSelection selection) {
  require_min_size(disc.size(), 3, "jmatrix-interp");
  const auto tilde = disc.last_deleted();
  std::vector<double> offsets(tilde.size());
  // Delta_N^+ = 1 at the zeros of g_{N-1,N-1}, so only arg R_N^+ remains.
  for (std::size_t s = 0; s < tilde.size(); ++s) {
    offsets[s] = upper_half_phase(r_plus(disc.model(), disc.size(), tilde[s])) / pi;
  }
  return merge_knots(disc.eigenvalues(), tilde, offsets, selection, "jmatrix-interp");
}

std::vector<double> heller_weights(std::span<const double> eigenvalues) {
  require_min_size(eigenvalues.size(), 3, "heller");
  return slopes_at_integers(heller_knots(eigenvalues), eigenvalues.size());
}

std::vector<double> broad_weights(const Discretization& disc, KnotSelection selection) {
  return slopes_at_integers(broad_knots(disc, selection), disc.size());
}

std::vector<double> jmatrix_interp_weights(const Discretization& disc, KnotSelection selection) {
  return slopes_at_integers(jmatrix_knots(disc, selection), disc.size());
}

std::vector<double> jmatrix_exact_weights(const Discretization& disc) {
  const std::size_t n = disc.size();
  const auto& es = disc.eigensystem();
  std::vector<double> w(n);
  for (std::size_t mu = 0; mu < n; ++mu) {
    const double e = es.values()[mu];
    const double im_inv_r = (1.0 / r_plus(disc.model(), n, e)).imag();
    if (!(im_inv_r > 0.0)) {
      throw NumericalError(NumericalErrorKind::kConvention,
                           fmt::format("Im[1/R_N^+] = {:.6g} <= 0 at e_{} = {:.17g}", im_inv_r, mu, e));
    }
    const double gamma_last = es.component(n - 1, mu);
    w[mu] = pi * gamma_last * gamma_last * disc.coupling() / im_inv_r;
  }
  return w;
}

std::vector<QuadratureNode> quadrature_weights(const Discretization& disc) {
  const auto& es = disc.eigensystem();
  const double mu0 = disc.model().zeroth_moment();
  std::vector<QuadratureNode> nodes(es.size());
  for (std::size_t mu = 0; mu < es.size(); ++mu) {
    const double g0 = es.component(0, mu);
    nodes[mu] = {es.values()[mu], mu0 * g0 * g0};
  }
  return nodes;
}

std::vector<double> exact_derivative_weights(const Discretization& disc) {
  const auto nodes = quadrature_weights(disc);
  std::vector<double> w(nodes.size());
  for (std::size_t mu = 0; mu < nodes.size(); ++mu) w[mu] = nodes[mu].weight / density(disc.model(), nodes[mu].energy);
  return w;
}

double zeta_inverse_direct(const Discretization& disc, double energy) {
  const auto& model = disc.model();
  if (!model.in_continuum(energy)) {
    throw NumericalError(NumericalErrorKind::kDomain,
                         fmt::format("zeta_inverse_direct: e={:.17g} outside the continuum", energy));
  }
  const auto eig = disc.eigenvalues();
  const std::size_t n = disc.size();

  // zeta^{-1} is an integer exactly at the poles of g_{N-1,N-1}: there
  // tan(pi x) = 0, and nowhere else because Im R_N^+ stays nonzero on the
  // continuum. Between consecutive eigenvalues x therefore lies in
  // (mu, mu + 1) and only its fractional part has to be computed.
  const auto above = std::upper_bound(eig.begin(), eig.end(), energy);
  const std::ptrdiff_t bracket = (above - eig.begin()) - 1;  // -1 below e_0
  for (std::ptrdiff_t mu : {bracket, bracket + 1}) {
    if (mu >= 0 && mu < static_cast<std::ptrdiff_t>(n) && std::abs(eig[mu] - energy) < kPoleGap) {
      return static_cast<double>(mu);
    }
  }

  const auto r = r_plus(model, n, energy);
  if (!(r.imag() < 0.0)) {
    throw NumericalError(NumericalErrorKind::kConvention,
                         fmt::format("Im R_N^+ = {:.6g} >= 0 at e={:.17g}", r.imag(), energy));
  }
  const double g = g_matrix_element(disc.eigensystem(), n - 1, n - 1, energy);
  const double r2 = std::norm(r);
  // tan(pi x) = Im R / Re[R + g J |R|^2]; dividing through by the real g
  // near a pole leaves the phase unchanged mod pi.
  const std::complex<double> w = std::abs(g) <= 1.0 ? r + g * disc.coupling() * r2 : r / g + disc.coupling() * r2;
  double frac = std::atan2(w.imag(), w.real()) / pi;
  frac -= std::floor(frac);
  return static_cast<double>(bracket) + frac;
}

double integrate(std::span<const double> weights, std::span<const double> eigenvalues,
                 std::span<const double> samples) {
  if (weights.size() != eigenvalues.size() || weights.size() != samples.size()) {
    throw PreconditionError("integrate: weights, eigenvalues and samples must have equal length");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) sum += weights[i] * samples[i];
  return sum;
}

const std::vector<double>& WeightTable::column(Method method) const {
  for (const auto& c : columns) {
    if (c.method == method) return c.values;
  }
  throw PreconditionError(fmt::format("WeightTable: method {} not computed", to_string(method)));
}

std::vector<double> compute_column(const Discretization& disc, Method method, KnotSelection selection) {
  switch (method) {
    case Method::kHeller: return heller_weights(disc.eigenvalues());
    case Method::kBroad: return broad_weights(disc, selection);
    case Method::kJMatrixInterp: return jmatrix_interp_weights(disc, selection);
    case Method::kJMatrixExact: return jmatrix_exact_weights(disc);
    case Method::kOracle: return exact_derivative_weights(disc);
  }
  return {};
}

WeightTable compute_weights(const Discretization& disc, std::span<const Method> methods, KnotSelection selection) {
  if (methods.empty()) throw PreconditionError("compute_weights: no methods requested");
  WeightTable table;
  table.energies.assign(disc.eigenvalues().begin(), disc.eigenvalues().end());
  for (const auto m : methods) {
    auto values = compute_column(disc, m, selection);
    for (std::size_t mu = 0; mu < values.size(); ++mu) {
      if (!(values[mu] > 0.0)) {
        throw NumericalError(NumericalErrorKind::kConvention,
                             fmt::format("{} weight {} = {:.6g} is not positive", to_string(m), mu, values[mu]));
      }
    }
    table.columns.push_back({m, std::move(values)});
  }
  return table;
}

}  // namespace dweights
