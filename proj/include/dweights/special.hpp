#pragma once

namespace dweights::special {

/// Generalized Laguerre polynomial L_n^alpha(x) by upward three-term
/// recurrence in n.
[[nodiscard]] double laguerre(int n, double alpha, double x);

/// Kummer's function 1F1(a; b; x) by direct summation of its power series
/// in extended precision. b must not be a non-positive integer. The series
/// terminates when a is a non-positive integer.
/// Throws NumericalError(kRange) if the sum overflows or fails to converge.
[[nodiscard]] long double hyp1f1(double a, double b, double x);

}  // namespace dweights::special
