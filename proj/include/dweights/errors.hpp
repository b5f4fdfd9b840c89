#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dweights {

/// Violated input contract (bad sizes, out-of-range parameters, ...).
/// The CLI maps these to exit status 2.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class NumericalErrorKind {
  kConvergence,    // eigensolver iteration budget exhausted
  kFitDegeneracy,  // continued-fraction coefficient recurrence broke down
  kPole,           // evaluation hit a pole
  kDomain,         // energy outside the continuum
  kRange,          // overflow / underflow of a prefactor
  kBranch,         // phase outside the [0, pi] convention
  kInterleave,     // knots not strictly monotone after merging
  kConvention,     // sign convention violated (e.g. Im[1/R] <= 0)
  kDensity,        // non-positive density
  kDegeneracy,     // vanishing denominator in an algebraic identity
};

[[nodiscard]] std::string_view to_string(NumericalErrorKind kind) noexcept;

/// Numerical failure inside a computation. The CLI maps these to exit status 1.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(NumericalErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  [[nodiscard]] NumericalErrorKind kind() const noexcept { return kind_; }

 private:
  NumericalErrorKind kind_;
};

}  // namespace dweights
