#include "dweights/rational_fit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <fmt/format.h>

#include "dweights/errors.hpp"

namespace dweights {

namespace {

constexpr double kTinyDivisor = 1e-300;
constexpr double kMinSpacing = 1e-12;
constexpr double kPoleRatio = 1e-12;
constexpr double kExtrapolation = 0.5;
constexpr double kRescale = 1e100;

}  // namespace

KnotSet::KnotSet(std::vector<Knot> knots) : knots_(std::move(knots)) {
  if (knots_.size() < 2) throw PreconditionError("KnotSet: need at least two knots");
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    const auto& k = knots_[i];
    if (!std::isfinite(k.x) || !std::isfinite(k.energy)) {
      throw PreconditionError(fmt::format("KnotSet: knot {} is not finite", i));
    }
    if (i == 0) continue;
    const auto& prev = knots_[i - 1];
    if (!(k.x > prev.x) || !(k.energy > prev.energy)) {
      throw NumericalError(NumericalErrorKind::kInterleave,
                           fmt::format("knot {} (x={:.17g}, e={:.17g}) does not increase past knot {} "
                                       "(x={:.17g}, e={:.17g})",
                                       i, k.x, k.energy, i - 1, prev.x, prev.energy));
    }
    if (k.x - prev.x < kMinSpacing) {
      throw PreconditionError(fmt::format("KnotSet: abscissas {} and {} closer than {}", i - 1, i, kMinSpacing));
    }
  }
}

RationalFit RationalFit::fit(const KnotSet& knots) {
  const auto pts = knots.knots();
  const std::size_t n = pts.size();
  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = pts[i].x;
    ys[i] = pts[i].energy;
  }

  // Coefficient a_{k} is fixed by requiring the fraction truncated after it to
  // pass through node k. Unwinding the fraction from the top at x_k:
  //   t = y_1 / y_k - 1,  t <- a_j (x_k - x_j) / t - 1  (j = 1 .. k-2),
  //   a_{k-1} = t / (x_k - x_{k-1}).
  // The leading ordinate scales the whole fraction; zero makes R identically 0.
  if (std::abs(ys[0]) < kTinyDivisor) {
    throw NumericalError(NumericalErrorKind::kFitDegeneracy, "node 0 has a vanishing ordinate");
  }
  std::vector<double> a;
  a.reserve(n - 1);
  for (std::size_t k = 1; k < n; ++k) {
    if (std::abs(ys[k]) < kTinyDivisor) {
      throw NumericalError(NumericalErrorKind::kFitDegeneracy,
                           fmt::format("node {} has a vanishing ordinate", k));
    }
    double t = ys[0] / ys[k] - 1.0;
    for (std::size_t j = 0; j + 1 < k; ++j) {
      if (std::abs(t) < kTinyDivisor) {
        throw NumericalError(NumericalErrorKind::kFitDegeneracy,
                             fmt::format("node {}: continued fraction collapses at level {}", k, j + 1));
      }
      t = a[j] * (xs[k] - xs[j]) / t - 1.0;
    }
    a.push_back(t / (xs[k] - xs[k - 1]));
    if (!std::isfinite(a.back())) {
      throw NumericalError(NumericalErrorKind::kFitDegeneracy,
                           fmt::format("node {}: non-finite coefficient", k));
    }
  }
  return RationalFit(std::move(xs), std::move(ys), std::move(a));
}

void RationalFit::check_range(double x) const {
  const double lo = xs_.front() - kExtrapolation;
  const double hi = xs_.back() + kExtrapolation;
  if (!(x >= lo && x <= hi)) {
    throw PreconditionError(fmt::format("RationalFit: x={:.17g} outside [{:.17g}, {:.17g}]", x, lo, hi));
  }
}

double RationalFit::eval(double x) const {
  return eval_deriv(x).value;
}

namespace {

// Value and first derivative in x.
struct Jet {
  double v = 0.0;
  double d = 0.0;
};

struct Convergent {
  Jet p;  // denominator of R
  Jet q;  // numerator of R, up to the factor y_1
};

// K = 1 + c_1/(1 + c_2/(1 + ...)), c_k = a_k (x - x_k), as the convergent
// P/Q of the forward recurrence
//   P_k = P_{k-1} + c_k P_{k-2},  Q_k = Q_{k-1} + c_k Q_{k-2},
// with P_{-1} = 1, P_0 = 1, Q_{-1} = 0, Q_0 = 1, so R = y_1 Q / P. No inner
// tail is divided by, so a vanishing tail (removable in R) is harmless.
Convergent convergent(std::span<const double> xs, std::span<const double> coeffs, double x) {
  Jet p2{1.0, 0.0}, p1{1.0, 0.0};
  Jet q2{0.0, 0.0}, q1{1.0, 0.0};
  auto step = [](const Jet& j1, const Jet& j2, double c, double a) {
    return Jet{j1.v + c * j2.v, j1.d + a * j2.v + c * j2.d};
  };
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const double c = coeffs[k] * (x - xs[k]);
    const Jet p = step(p1, p2, c, coeffs[k]);
    const Jet q = step(q1, q2, c, coeffs[k]);
    p2 = p1, p1 = p, q2 = q1, q1 = q;
    const double big = std::max(std::abs(p1.v), std::abs(q1.v));
    if (big > kRescale) {
      for (Jet* j : {&p1, &p2, &q1, &q2}) {
        j->v /= big;
        j->d /= big;
      }
    }
  }
  return {p1, q1};
}

}  // namespace

ValueSlope RationalFit::eval_deriv(double x) const {
  check_range(x);
  const auto c = convergent(xs_, coeffs_, x);
  if (!(std::abs(c.p.v) > kPoleRatio * std::abs(c.q.v))) {
    throw NumericalError(NumericalErrorKind::kPole, fmt::format("continued fraction pole near x={:.17g}", x));
  }
  const double y = ys_.front();
  return {y * c.q.v / c.p.v, y * (c.q.d * c.p.v - c.q.v * c.p.d) / (c.p.v * c.p.v)};
}

}  // namespace dweights
