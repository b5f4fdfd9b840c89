#include "dweights/models.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <fmt/format.h>

#include "dweights/errors.hpp"
#include "dweights/special.hpp"

namespace dweights {

namespace {

using std::numbers::pi;

constexpr double kMomentTolerance = 1e-13;
constexpr unsigned kMomentMaxDepth = 20;

// Normalized density of the chebyshev model, no domain checks.
double chebyshev_density(double a, double b, double x) {
  const double b2 = b * b;
  const double denom = 4.0 * b2 * b2 + (a - x) * (a + (4.0 * b2 - 1.0) * x);
  if (!(denom > 0.0)) {
    throw NumericalError(NumericalErrorKind::kDensity,
                         fmt::format("density denominator {:.6g} <= 0 at e={:.17g} (A={}, B={})", denom, x, a, b));
  }
  return (2.0 * b2 / pi) * std::sqrt(1.0 - x * x) / denom;
}

double laguerre_weight_log(int ell, double lambda, double energy) {
  const double alpha = ell + 0.5;
  const double y = 2.0 * energy / (lambda * lambda);
  return std::log(2.0 / (lambda * lambda)) + alpha * std::log(y) - y - std::lgamma(alpha + 1.0);
}

void require_continuum(const ModelProblem& model, double energy, const char* what) {
  if (!model.in_continuum(energy)) {
    throw NumericalError(NumericalErrorKind::kDomain,
                         fmt::format("{}: e={:.17g} outside the continuum ({}, {})", what, energy,
                                     model.continuum_lower(), model.continuum_upper()));
  }
}

void require_size(std::size_t n, std::size_t min, const char* what) {
  if (n < min) throw PreconditionError(fmt::format("{}: N must be >= {}, got {}", what, min, n));
}

}  // namespace

std::string_view to_string(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::kChebyshevModified: return "chebyshev-mod";
    case ModelKind::kPartialWaveKE: return "pwke";
  }
  return "unknown";
}

ModelProblem ModelProblem::chebyshev_modified(double a, double b, double density_scale) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw PreconditionError("chebyshev model: A and B must be finite");
  if (b == 0.0) throw PreconditionError("chebyshev model: B must be nonzero");
  if (!(density_scale > 0.0) || !std::isfinite(density_scale)) {
    throw PreconditionError("chebyshev model: density scale must be positive");
  }
  ModelProblem m;
  m.kind_ = ModelKind::kChebyshevModified;
  m.a_ = a;
  m.b_ = b;
  m.density_scale_ = density_scale;
  // x = cos(theta) removes the square-root endpoint behaviour.
  auto integrand = [a, b](double theta) {
    const double s = std::sin(theta);
    return chebyshev_density(a, b, std::cos(theta)) * s;
  };
  m.mu0_ = density_scale * boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
                               integrand, 0.0, pi, kMomentMaxDepth, kMomentTolerance);
  return m;
}

ModelProblem ModelProblem::partial_wave(int ell, double lambda) {
  if (ell < 0) throw PreconditionError("partial-wave model: ell must be non-negative");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw PreconditionError("partial-wave model: lambda must be positive");
  ModelProblem m;
  m.kind_ = ModelKind::kPartialWaveKE;
  m.ell_ = ell;
  m.lambda_ = lambda;
  auto integrand = [ell, lambda](double e) {
    return e > 0.0 ? std::exp(laguerre_weight_log(ell, lambda, e)) : 0.0;
  };
  m.mu0_ = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      integrand, 0.0, std::numeric_limits<double>::infinity(), kMomentMaxDepth, kMomentTolerance);
  return m;
}

double ModelProblem::continuum_lower() const noexcept {
  return kind_ == ModelKind::kChebyshevModified ? -1.0 : 0.0;
}

double ModelProblem::continuum_upper() const noexcept {
  return kind_ == ModelKind::kChebyshevModified ? 1.0 : std::numeric_limits<double>::infinity();
}

bool ModelProblem::in_continuum(double energy) const noexcept {
  return energy > continuum_lower() && energy < continuum_upper();
}

SymTridiag build_hamiltonian(const ModelProblem& model, std::size_t n) {
  require_size(n, 1, "build_hamiltonian");
  std::vector<double> diag(n, 0.0);
  std::vector<double> off(n - 1, 0.5);
  switch (model.kind()) {
    case ModelKind::kChebyshevModified:
      diag[0] = model.a();
      if (n > 1) off[0] = model.b();
      break;
    case ModelKind::kPartialWaveKE: {
      const double half_l2 = 0.5 * model.lambda() * model.lambda();
      const double nu = model.ell() + 1.5;
      for (std::size_t k = 0; k < n; ++k) {
        diag[k] = half_l2 * (2.0 * static_cast<double>(k) + nu);
        if (k + 1 < n) off[k] = half_l2 * std::sqrt((k + 1.0) * (static_cast<double>(k) + nu));
      }
      break;
    }
  }
  return SymTridiag(std::move(diag), std::move(off));
}

double j_coupling(const ModelProblem& model, std::size_t n) {
  require_size(n, 2, "j_coupling");
  switch (model.kind()) {
    case ModelKind::kChebyshevModified: return 0.5;
    case ModelKind::kPartialWaveKE: {
      const double k = static_cast<double>(n - 1);
      return 0.5 * model.lambda() * model.lambda() * std::sqrt((k + 1.0) * (k + model.ell() + 1.5));
    }
  }
  return 0.0;
}

ReferenceWave wave_coefficients(const ModelProblem& model, std::size_t n, double energy) {
  if (model.kind() != ModelKind::kPartialWaveKE) {
    throw PreconditionError("wave_coefficients: only defined for the partial-wave model");
  }
  require_continuum(model, energy, "wave_coefficients");
  const int ell = model.ell();
  const double lambda = model.lambda();
  const double alpha = ell + 0.5;
  const double y = 2.0 * energy / (lambda * lambda);
  const double nn = static_cast<double>(n);

  // Shared factor (-1)^n lambda^{-1} sqrt(pi/2) a_n e^{-y/2}, in logs.
  const double log_an = 0.5 * (std::log(2.0 * lambda) + std::lgamma(nn + 1.0) - std::lgamma(nn + alpha + 1.0));
  const double log_common = -std::log(lambda) + 0.5 * std::log(pi / 2.0) + log_an - 0.5 * y;
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;

  const double log_s_pref = log_common + 0.5 * (ell + 1.0) * std::log(y);
  const double log_c_pref = log_common - 0.5 * ell * std::log(y) + std::lgamma(alpha) - std::log(pi);
  if (log_s_pref < -700.0 || log_s_pref > 700.0 || log_c_pref < -700.0 || log_c_pref > 700.0) {
    throw NumericalError(NumericalErrorKind::kRange,
                         fmt::format("wave_coefficients: prefactor out of range at e={:.17g}", energy));
  }

  const double lag = special::laguerre(static_cast<int>(n), alpha, y);
  const long double kummer = special::hyp1f1(-nn - alpha, 0.5 - ell, y);

  const double s = sign * std::exp(log_s_pref) * lag;
  const long double c = sign * std::exp(static_cast<long double>(log_c_pref)) * kummer;
  if (!std::isfinite(s) || !std::isfinite(static_cast<double>(c))) {
    throw NumericalError(NumericalErrorKind::kRange,
                         fmt::format("wave_coefficients: overflow for n={} at e={:.17g}", n, energy));
  }
  return {s, static_cast<double>(c)};
}

std::complex<double> r_plus(const ModelProblem& model, std::size_t n, double energy) {
  require_size(n, 1, "r_plus");
  require_continuum(model, energy, "r_plus");
  switch (model.kind()) {
    case ModelKind::kChebyshevModified:
      // (x + i sqrt(1 - x^2))^{-1} has unit modulus.
      return {energy, -std::sqrt(1.0 - energy * energy)};
    case ModelKind::kPartialWaveKE: {
      const auto hi = wave_coefficients(model, n, energy);
      const auto lo = wave_coefficients(model, n - 1, energy);
      const std::complex<double> den(lo.c, lo.s);
      if (std::abs(den) == 0.0) {
        throw NumericalError(NumericalErrorKind::kDegeneracy,
                             fmt::format("r_plus: c_(N-1) + i s_(N-1) vanishes at e={:.17g}", energy));
      }
      return std::complex<double>(hi.c, hi.s) / den;
    }
  }
  return {};
}

std::complex<double> green00_exact(const ModelProblem& model, double energy) {
  if (model.kind() != ModelKind::kChebyshevModified) {
    throw PreconditionError("green00_exact: closed form only available for the chebyshev model");
  }
  require_continuum(model, energy, "green00_exact");
  const double b2 = model.b() * model.b();
  // sqrt(z^2 - 1) -> i sqrt(1 - e^2) on the upper rim.
  const std::complex<double> den(model.a() + (2.0 * b2 - 1.0) * energy, -2.0 * b2 * std::sqrt(1.0 - energy * energy));
  return 1.0 / den;
}

double density(const ModelProblem& model, double energy) {
  require_continuum(model, energy, "density");
  double rho = 0.0;
  switch (model.kind()) {
    case ModelKind::kChebyshevModified:
      rho = model.density_scale() * chebyshev_density(model.a(), model.b(), energy);
      break;
    case ModelKind::kPartialWaveKE:
      rho = std::exp(laguerre_weight_log(model.ell(), model.lambda(), energy));
      break;
  }
  if (!(rho > 0.0)) {
    throw NumericalError(NumericalErrorKind::kDensity, fmt::format("density {:.6g} <= 0 at e={:.17g}", rho, energy));
  }
  return rho;
}

}  // namespace dweights
