#include "dweights/special.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "dweights/errors.hpp"

namespace dweights::special {

double laguerre(int n, double alpha, double x) {
  if (n < 0) throw PreconditionError("laguerre: negative degree");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    // (k+1) L_{k+1} = (2k + 1 + alpha - x) L_k - (k + alpha) L_{k-1}
    const double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

long double hyp1f1(double a, double b, double x) {
  if (b <= 0.0 && b == std::floor(b)) {
    throw PreconditionError(fmt::format("hyp1f1: b={} is a non-positive integer", b));
  }
  constexpr int kMaxTerms = 100000;
  constexpr long double eps = std::numeric_limits<long double>::epsilon();
  const bool terminating = a <= 0.0 && a == std::floor(a);

  long double term = 1.0L;
  long double sum = 1.0L;
  for (int k = 0; k < kMaxTerms; ++k) {
    term *= (static_cast<long double>(a) + k) / (static_cast<long double>(b) + k) *
            static_cast<long double>(x) / (k + 1.0L);
    sum += term;
    if (!std::isfinite(sum)) {
      throw NumericalError(NumericalErrorKind::kRange, fmt::format("hyp1f1({}, {}, {}) overflows", a, b, x));
    }
    if (term == 0.0L && terminating) return sum;
    // Past the sign changes of (a)_k the terms are monotone eventually; only
    // stop once the index has cleared both |a| and x.
    if (k > std::abs(a) && k > std::abs(x) && std::abs(term) <= eps * std::abs(sum)) return sum;
  }
  throw NumericalError(NumericalErrorKind::kRange,
                       fmt::format("hyp1f1({}, {}, {}) did not converge in {} terms", a, b, x, kMaxTerms));
}

}  // namespace dweights::special
