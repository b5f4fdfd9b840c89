#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dweights/models.hpp"
#include "dweights/rational_fit.hpp"
#include "dweights/tridiag.hpp"

namespace dweights {

enum class Method {
  kHeller,         // slope of the fit through (mu, e_mu)
  kBroad,          // + knots at the zeros of g_00, placed by arg G_00^(+)
  kJMatrixInterp,  // + knots at the zeros of g_{N-1,N-1}, placed by arg R_N^+
  kJMatrixExact,   // closed form, no interpolation
  kOracle,         // Gauss weight over density
};

inline constexpr Method kAllMethods[] = {Method::kHeller, Method::kBroad, Method::kJMatrixInterp,
                                         Method::kJMatrixExact, Method::kOracle};

[[nodiscard]] std::string_view to_string(Method method) noexcept;
[[nodiscard]] std::optional<Method> parse_method(std::string_view name) noexcept;

/// Which of the N-1 extra knots enter the Broad / J-matrix interpolation.
enum class KnotSelection {
  /// 2N-2 knots: the extra knot nearest the top of the spectrum is left out,
  /// giving a continued fraction with 2N-3 coefficients.
  kDropLastExtra,
  /// All 2N-1 knots.
  kAll,
};

[[nodiscard]] std::string_view to_string(KnotSelection selection) noexcept;
[[nodiscard]] std::optional<KnotSelection> parse_knot_selection(std::string_view name) noexcept;

/// The N x N truncation of a model with its spectra: eigenpairs of H, and the
/// eigenvalues with the first (hat) and last (tilde) row/column deleted.
class Discretization {
 public:
  Discretization(ModelProblem model, std::size_t n);

  [[nodiscard]] const ModelProblem& model() const noexcept { return model_; }
  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] const SymTridiag& hamiltonian() const noexcept { return hamiltonian_; }
  [[nodiscard]] const EigenSystem& eigensystem() const noexcept { return eigen_; }
  [[nodiscard]] std::span<const double> eigenvalues() const noexcept { return eigen_.values(); }
  [[nodiscard]] std::span<const double> first_deleted() const noexcept { return hat_; }
  [[nodiscard]] std::span<const double> last_deleted() const noexcept { return tilde_; }
  [[nodiscard]] double coupling() const noexcept { return coupling_; }

 private:
  ModelProblem model_;
  std::size_t n_;
  SymTridiag hamiltonian_;
  EigenSystem eigen_;
  std::vector<double> hat_;
  std::vector<double> tilde_;
  double coupling_;
};

/// g_nm(e) = sum_mu Gamma_{n mu} Gamma_{m mu} / (e_mu - e).
/// Throws NumericalError(kPole) if e is within 1e-12 of an eigenvalue.
[[nodiscard]] double g_matrix_element(const EigenSystem& es, std::size_t n, std::size_t m, double energy);

struct GreenPieces {
  double g00;
  double g0n1;  // g_{0,N-1} == g_{N-1,0}
  double gn1n1;
  std::complex<double> rplus;
  std::complex<double> delta;  // 1 + g_{N-1,N-1} J R_N^+
};

[[nodiscard]] GreenPieces green_pieces(const Discretization& disc, double energy);

/// G_00^(+)(e) assembled from the finite problem and the tail coupling:
///   g00 - g_{0,N-1} J (R_N^+ / Delta_N^+) g_{N-1,0}.
[[nodiscard]] std::complex<double> assemble_green00(const Discretization& disc, double energy);
[[nodiscard]] std::complex<double> assemble_green00(const ModelProblem& model, std::size_t n, double energy);

/// Phase of z mapped into [0, pi]. Throws NumericalError(kBranch) otherwise.
[[nodiscard]] double upper_half_phase(std::complex<double> z);

[[nodiscard]] KnotSet heller_knots(std::span<const double> eigenvalues);
[[nodiscard]] KnotSet broad_knots(const Discretization& disc, KnotSelection selection);
[[nodiscard]] KnotSet jmatrix_knots(const Discretization& disc, KnotSelection selection);

/// dzeta/dx at x = mu of the fit through (mu, e_mu). Needs >= 3 eigenvalues.
[[nodiscard]] std::vector<double> heller_weights(std::span<const double> eigenvalues);
[[nodiscard]] std::vector<double> broad_weights(const Discretization& disc,
                                                KnotSelection selection = KnotSelection::kDropLastExtra);
[[nodiscard]] std::vector<double> jmatrix_interp_weights(const Discretization& disc,
                                                         KnotSelection selection = KnotSelection::kDropLastExtra);
/// omega_mu = pi Gamma_{N-1,mu}^2 J / Im[1 / R_N^+(e_mu)].
[[nodiscard]] std::vector<double> jmatrix_exact_weights(const Discretization& disc);

struct QuadratureNode {
  double energy;
  double weight;
};

/// Gauss rule of the density: weight_mu = mu0 Gamma_{0 mu}^2.
[[nodiscard]] std::vector<QuadratureNode> quadrature_weights(const Discretization& disc);
/// weight_mu / rho(e_mu).
[[nodiscard]] std::vector<double> exact_derivative_weights(const Discretization& disc);

/// zeta^{-1}(e) evaluated directly from the tail coupling, without
/// interpolation. Continuous and increasing, with zeta^{-1}(e_mu) = mu.
[[nodiscard]] double zeta_inverse_direct(const Discretization& disc, double energy);

/// sum_mu weights[mu] * samples[mu].
[[nodiscard]] double integrate(std::span<const double> weights, std::span<const double> eigenvalues,
                               std::span<const double> samples);

struct WeightColumn {
  Method method;
  std::vector<double> values;
};

struct WeightTable {
  std::vector<double> energies;
  std::vector<WeightColumn> columns;

  /// Throws PreconditionError if the method was not computed.
  [[nodiscard]] const std::vector<double>& column(Method method) const;
};

[[nodiscard]] std::vector<double> compute_column(const Discretization& disc, Method method,
                                                 KnotSelection selection = KnotSelection::kDropLastExtra);

/// Every requested column, rows in ascending energy. All weights must come
/// out strictly positive.
[[nodiscard]] WeightTable compute_weights(const Discretization& disc, std::span<const Method> methods,
                                          KnotSelection selection = KnotSelection::kDropLastExtra);

}  // namespace dweights
