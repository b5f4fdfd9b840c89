#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dweights {

struct Knot {
  double x;       // abscissa (fractional index)
  double energy;  // ordinate
};

/// Interpolation points for a monotone function zeta(x): at least two knots,
/// with abscissas and ordinates both strictly increasing.
class KnotSet {
 public:
  explicit KnotSet(std::vector<Knot> knots);

  [[nodiscard]] std::span<const Knot> knots() const noexcept { return knots_; }
  [[nodiscard]] std::size_t size() const noexcept { return knots_.size(); }

 private:
  std::vector<Knot> knots_;
};

struct ValueSlope {
  double value;
  double slope;
};

/// Schlessinger point-method continued fraction
///
///   R(x) = y_1 / (1 + a_1 (x - x_1) / (1 + a_2 (x - x_2) / (1 + ...)))
///
/// interpolating every knot of a KnotSet, inserted in increasing x.
class RationalFit {
 public:
  /// Throws NumericalError(kFitDegeneracy) naming the node whose coefficient
  /// could not be formed.
  static RationalFit fit(const KnotSet& knots);

  [[nodiscard]] double eval(double x) const;

  /// Value and dR/dx, propagated through the continued fraction alongside
  /// the value (forward-mode differentiation).
  [[nodiscard]] ValueSlope eval_deriv(double x) const;

  [[nodiscard]] std::span<const double> nodes() const noexcept { return xs_; }
  [[nodiscard]] std::span<const double> ordinates() const noexcept { return ys_; }
  [[nodiscard]] std::span<const double> coeffs() const noexcept { return coeffs_; }

 private:
  RationalFit(std::vector<double> xs, std::vector<double> ys, std::vector<double> coeffs)
      : xs_(std::move(xs)), ys_(std::move(ys)), coeffs_(std::move(coeffs)) {}

  void check_range(double x) const;

  std::vector<double> xs_;
  std::vector<double> ys_;
  std::vector<double> coeffs_;
};

}  // namespace dweights
