#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "dweights/errors.hpp"
#include "dweights/rational_fit.hpp"

using namespace dweights;

namespace {

template <typename F>
void check_kind(F&& f, NumericalErrorKind kind) {
  try {
    f();
    FAIL("expected NumericalError");
  } catch (const NumericalError& e) {
    CHECK(e.kind() == kind);
  }
}

KnotSet chebyshev_knots(int n) {
  std::vector<Knot> k;
  for (int mu = 0; mu < n; ++mu) k.push_back({double(mu), -std::cos((mu + 1) * std::numbers::pi / (n + 1))});
  return KnotSet(k);
}

}  // namespace

TEST_CASE("knot set invariants") {
  CHECK_THROWS_AS(KnotSet({{0.0, 1.0}}), PreconditionError);
  CHECK_THROWS_AS(KnotSet({{0.0, 1.0}, {1.0, NAN}}), PreconditionError);
  CHECK_THROWS_AS(KnotSet({{0.0, 1.0}, {1e-13, 2.0}}), PreconditionError);
  check_kind([] { KnotSet({{0.0, 1.0}, {1.0, 0.5}}); }, NumericalErrorKind::kInterleave);
  check_kind([] { KnotSet({{1.0, 1.0}, {0.0, 2.0}}); }, NumericalErrorKind::kInterleave);
  CHECK(KnotSet({{0.0, 1.0}, {1.0, 2.0}}).size() == 2);
}

TEST_CASE("two knots give y1 / (1 + a1 (x - x1))") {
  const auto fit = RationalFit::fit(KnotSet({{0.0, 1.0}, {1.0, 2.0}}));
  REQUIRE(fit.coeffs().size() == 1);
  CHECK(fit.coeffs()[0] == doctest::Approx(-0.5));
  for (double x : {-0.25, 0.0, 0.25, 0.5, 1.0, 1.4}) {
    const double d = 1.0 - 0.5 * x;
    const auto vs = fit.eval_deriv(x);
    CHECK(vs.value == doctest::Approx(1.0 / d).epsilon(1e-15));
    CHECK(vs.slope == doctest::Approx(0.5 / (d * d)).epsilon(1e-15));
  }
}

TEST_CASE("vanishing leading ordinate is degenerate") {
  // y1 = 0 would make the fraction identically zero.
  check_kind([] { (void)RationalFit::fit(KnotSet({{0.0, 0.0}, {1.0, 2.0}})); }, NumericalErrorKind::kFitDegeneracy);
  check_kind([] { (void)RationalFit::fit(KnotSet({{0.0, -1.0}, {1.0, 0.0}})); }, NumericalErrorKind::kFitDegeneracy);
}

TEST_CASE("three knots of a [1/1] rational recover it everywhere") {
  auto f = [](double x) { return (3.0 + 2.0 * x) / (1.0 + 0.5 * x); };
  auto df = [](double x) { return 0.5 / ((1.0 + 0.5 * x) * (1.0 + 0.5 * x)); };
  const auto fit = RationalFit::fit(KnotSet({{0.0, f(0.0)}, {1.0, f(1.0)}, {2.0, f(2.0)}}));
  for (double x : {-0.4, 0.3, 0.5, 1.7, 2.45}) {
    const auto vs = fit.eval_deriv(x);
    CHECK(vs.value == doctest::Approx(f(x)).epsilon(1e-13));
    CHECK(vs.slope == doctest::Approx(df(x)).epsilon(1e-12));
  }
}

TEST_CASE("Chebyshev eigenvalue knots") {
  const auto knots = chebyshev_knots(10);
  const auto fit = RationalFit::fit(knots);
  CHECK(fit.coeffs().size() == 9);
  for (const auto& k : knots.knots()) CHECK(fit.eval(k.x) == doctest::Approx(k.energy).epsilon(1e-10));
  CHECK(std::abs(fit.eval(4.4) + std::cos(5.4 * std::numbers::pi / 11.0)) < 5e-3);
  for (int mu = 1; mu <= 8; ++mu) {
    const double closed = std::numbers::pi / 11.0 * std::sin((mu + 1) * std::numbers::pi / 11.0);
    CHECK(std::abs(fit.eval_deriv(mu).slope - closed) < 5e-3);
  }
}

TEST_CASE("antisymmetric data: the interpolant has a small-residue pole at the centre") {
  // Ten knots of -cos((x+1) pi/11) are antisymmetric about x = 4.5 and the
  // exact continued-fraction interpolant has a simple pole there, residue
  // about 7.435e-8 (50-digit evaluation of the same recurrence). Away from it
  // the fit tracks the closed form closely.
  const auto fit = RationalFit::fit(chebyshev_knots(10));
  auto err = [&](double x) { return fit.eval(x) + std::cos((x + 1.0) * std::numbers::pi / 11.0); };
  for (double dx : {1e-3, -1e-3, 1e-4, -1e-4}) CHECK(err(4.5 + dx) * dx == doctest::Approx(7.435e-8).epsilon(0.02));
  CHECK(std::abs(err(4.3)) < 1e-5);
  CHECK(std::abs(err(4.7)) < 1e-5);
}

TEST_CASE("slope agrees with central differences") {
  std::mt19937_64 rng(5);
  for (int n : {5, 10, 19}) {
    const auto fit = RationalFit::fit(chebyshev_knots(n));
    std::uniform_real_distribution<double> where(0.0, n - 1.0);
    const double h = 1e-6;
    for (int i = 0; i < 100; ++i) {
      const double x = where(rng);
      const double central = (fit.eval(x + h) - fit.eval(x - h)) / (2.0 * h);
      CHECK(fit.eval_deriv(x).slope == doctest::Approx(central).epsilon(1e-5));
    }
  }
}

TEST_CASE("evaluation range and poles") {
  const auto fit = RationalFit::fit(KnotSet({{0.0, 1.0}, {1.0, 4.0}}));
  CHECK_NOTHROW((void)fit.eval(-0.5));
  CHECK_NOTHROW((void)fit.eval(1.2));
  CHECK_THROWS_AS((void)fit.eval(-0.6), PreconditionError);
  CHECK_THROWS_AS((void)fit.eval(NAN), PreconditionError);
  // 1 / (1 - 3x/4) has its pole at x = 4/3, inside [x1 - 1/2, xn + 1/2].
  check_kind([&] { (void)fit.eval(4.0 / 3.0); }, NumericalErrorKind::kPole);
}

TEST_CASE("fit is deterministic") {
  const auto a = RationalFit::fit(chebyshev_knots(12));
  const auto b = RationalFit::fit(chebyshev_knots(12));
  REQUIRE(a.coeffs().size() == b.coeffs().size());
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) CHECK(a.coeffs()[i] == b.coeffs()[i]);
  CHECK(a.eval(3.3) == b.eval(3.3));
}
