#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

#include "dweights/tridiag.hpp"

namespace dweights {

enum class ModelKind {
  /// Chebyshev-type Jacobi matrix with diag (A, 0, 0, ...) and
  /// off-diagonal (B, 1/2, 1/2, ...); continuum [-1, 1].
  kChebyshevModified,
  /// l-th partial-wave kinetic energy in the Gaussian-Laguerre (oscillator)
  /// basis with scale lambda; continuum [0, inf).
  kPartialWaveKE,
};

[[nodiscard]] std::string_view to_string(ModelKind kind) noexcept;

/// One of the two reference problems. Immutable after construction; the
/// zeroth moment of the density is computed once by adaptive quadrature.
class ModelProblem {
 public:
  /// `density_scale` multiplies the normalized density; pi/2 together with
  /// A = 0, B = 1/2 gives the textbook rho(x) = sqrt(1 - x^2).
  static ModelProblem chebyshev_modified(double a, double b, double density_scale = 1.0);
  static ModelProblem partial_wave(int ell, double lambda);

  [[nodiscard]] ModelKind kind() const noexcept { return kind_; }
  [[nodiscard]] double a() const noexcept { return a_; }
  [[nodiscard]] double b() const noexcept { return b_; }
  [[nodiscard]] int ell() const noexcept { return ell_; }
  [[nodiscard]] double lambda() const noexcept { return lambda_; }
  [[nodiscard]] double density_scale() const noexcept { return density_scale_; }

  /// Integral of the density over the continuum.
  [[nodiscard]] double zeroth_moment() const noexcept { return mu0_; }

  [[nodiscard]] double continuum_lower() const noexcept;
  [[nodiscard]] double continuum_upper() const noexcept;
  /// Strictly inside the continuum.
  [[nodiscard]] bool in_continuum(double energy) const noexcept;

 private:
  ModelProblem() = default;

  ModelKind kind_ = ModelKind::kChebyshevModified;
  double a_ = 0.0;
  double b_ = 0.5;
  int ell_ = 0;
  double lambda_ = 1.0;
  double density_scale_ = 1.0;
  double mu0_ = 0.0;
};

/// Sine-like and cosine-like expansion coefficients s_n(e), c_n(e).
struct ReferenceWave {
  double s;
  double c;
};

/// N x N truncation of the model Hamiltonian.
[[nodiscard]] SymTridiag build_hamiltonian(const ModelProblem& model, std::size_t n);

/// J_{N-1,N} = <phi_{N-1}| H0 - e |phi_N>, energy independent for an
/// orthonormal basis.
[[nodiscard]] double j_coupling(const ModelProblem& model, std::size_t n);

/// R_N^+(e) = (c_N + i s_N) / (c_{N-1} + i s_{N-1}).
[[nodiscard]] std::complex<double> r_plus(const ModelProblem& model, std::size_t n, double energy);

/// s_n(e) and c_n(e) for the partial-wave model.
[[nodiscard]] ReferenceWave wave_coefficients(const ModelProblem& model, std::size_t n, double energy);

/// Closed-form G_00^(+)(e) on the upper rim of the cut, chebyshev model only.
[[nodiscard]] std::complex<double> green00_exact(const ModelProblem& model, double energy);

/// Spectral density rho(e) > 0 inside the continuum.
[[nodiscard]] double density(const ModelProblem& model, double energy);

}  // namespace dweights
