#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <tuple>
#include <vector>

#include "dweights/errors.hpp"
#include "dweights/models.hpp"
#include "dweights/tridiag.hpp"

using namespace dweights;
using std::numbers::pi;

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

const double kThird = 1.0 / 3.0;

// Reference partial-wave parameters: l = 1, lambda = 1.3, N = 5.
ModelProblem table2() { return ModelProblem::partial_wave(1, 1.3); }
const double kTable2Energies[] = {0.69089884, 2.08912217, 4.32302517, 7.64230380, 12.7171500};

}  // namespace

TEST_CASE("model construction") {
  const auto m = ModelProblem::chebyshev_modified(kThird, kThird);
  CHECK(m.kind() == ModelKind::kChebyshevModified);
  CHECK(to_string(m.kind()) == "chebyshev-mod");
  CHECK(m.continuum_lower() == -1.0);
  CHECK(m.continuum_upper() == 1.0);
  CHECK(m.in_continuum(0.999));
  CHECK_FALSE(m.in_continuum(1.0));
  CHECK_THROWS_AS(ModelProblem::chebyshev_modified(0.2, 0.0), PreconditionError);
  CHECK_THROWS_AS(ModelProblem::chebyshev_modified(NAN, 0.5), PreconditionError);
  CHECK_THROWS_AS(ModelProblem::chebyshev_modified(0.0, 0.5, -1.0), PreconditionError);

  const auto p = table2();
  CHECK(to_string(p.kind()) == "pwke");
  CHECK(p.continuum_lower() == 0.0);
  CHECK(std::isinf(p.continuum_upper()));
  CHECK_FALSE(p.in_continuum(0.0));
  CHECK(p.in_continuum(1e6));
  CHECK_THROWS_AS(ModelProblem::partial_wave(-1, 1.0), PreconditionError);
  CHECK_THROWS_AS(ModelProblem::partial_wave(0, 0.0), PreconditionError);
}

TEST_CASE("Hamiltonian truncations") {
  const auto h = build_hamiltonian(ModelProblem::chebyshev_modified(kThird, kThird), 3);
  CHECK(h.diag()[0] == kThird);
  CHECK(h.diag()[1] == 0.0);
  CHECK(h.diag()[2] == 0.0);
  CHECK(h.off()[0] == kThird);
  CHECK(h.off()[1] == 0.5);

  const auto k = build_hamiltonian(ModelProblem::partial_wave(1, 1.0), 2);
  CHECK(k.diag()[0] == doctest::Approx(1.25));
  CHECK(k.diag()[1] == doctest::Approx(2.25));
  CHECK(k.off()[0] == doctest::Approx(std::sqrt(2.5) / 2.0));

  CHECK(build_hamiltonian(ModelProblem::partial_wave(1, 1.0), 1).size() == 1);
  CHECK_THROWS_AS((void)build_hamiltonian(ModelProblem::partial_wave(1, 1.0), 0), PreconditionError);

  const auto e = eigenvalues(build_hamiltonian(table2(), 5));
  CHECK(std::abs(e[0] - 0.69089884) < 1e-8);
  for (std::size_t mu = 0; mu < 4; ++mu) CHECK(std::abs(e[mu] - kTable2Energies[mu]) < 1e-8);
}

TEST_CASE("J coupling") {
  CHECK(j_coupling(ModelProblem::chebyshev_modified(kThird, kThird), 2) == 0.5);
  CHECK(j_coupling(ModelProblem::chebyshev_modified(kThird, kThird), 40) == 0.5);
  CHECK(j_coupling(ModelProblem::partial_wave(1, 1.0), 5) == doctest::Approx(0.5 * std::sqrt(32.5)));
  CHECK(j_coupling(ModelProblem::partial_wave(0, 2.0), 2) == doctest::Approx(2.0 * std::sqrt(5.0)));
  CHECK_THROWS_AS((void)j_coupling(ModelProblem::partial_wave(0, 2.0), 1), PreconditionError);
  // J_{N-1,N} is the next off-diagonal element of the untruncated matrix.
  const auto big = build_hamiltonian(table2(), 9);
  for (std::size_t n = 2; n <= 8; ++n) CHECK(j_coupling(table2(), n) == doctest::Approx(big.off()[n - 1]));
}

TEST_CASE("R_N^+ for the chebyshev model") {
  const auto m = ModelProblem::chebyshev_modified(kThird, kThird);
  const auto r0 = r_plus(m, 10, 0.0);
  CHECK(r0.real() == doctest::Approx(0.0));
  CHECK(r0.imag() == doctest::Approx(-1.0));
  for (int i = 1; i < 200; ++i) {
    const double e = -1.0 + i / 100.0;
    CHECK(std::abs(r_plus(m, 7, e)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r_plus(m, 7, e) == r_plus(m, 30, e));
  }
  check_kind([&] { (void)r_plus(m, 10, 1.0); }, NumericalErrorKind::kDomain);
  check_kind([&] { (void)r_plus(m, 10, -1.5); }, NumericalErrorKind::kDomain);
}

TEST_CASE("reference waves obey the three-term recurrence") {
  // (H0 - e) acting on s vanishes in every row; on c in every row but the first.
  for (int ell = 0; ell <= 3; ++ell) {
    const auto m = ModelProblem::partial_wave(ell, 1.3);
    const auto h = build_hamiltonian(m, 12);
    for (double e : {0.2, 1.1, 4.0, 9.5}) {
      std::vector<double> s, c;
      for (std::size_t n = 0; n < 12; ++n) {
        const auto w = wave_coefficients(m, n, e);
        s.push_back(w.s);
        c.push_back(w.c);
      }
      for (std::size_t n = 0; n + 1 < 12; ++n) {
        const double below_s = n == 0 ? 0.0 : h.off()[n - 1] * s[n - 1];
        const double rs = below_s + (h.diag()[n] - e) * s[n] + h.off()[n] * s[n + 1];
        const double scale_s = std::abs(h.diag()[n] * s[n]) + std::abs(h.off()[n] * s[n + 1]) + std::abs(below_s);
        CHECK(std::abs(rs) <= 1e-12 * scale_s);
        if (n == 0) continue;
        const double below_c = h.off()[n - 1] * c[n - 1];
        const double rc = below_c + (h.diag()[n] - e) * c[n] + h.off()[n] * c[n + 1];
        const double scale_c = std::abs(h.diag()[n] * c[n]) + std::abs(h.off()[n] * c[n + 1]) + std::abs(below_c);
        CHECK(std::abs(rc) <= 1e-10 * scale_c);
      }
    }
  }
}

TEST_CASE("Casoratian is constant in n") {
  const auto m = table2();
  const auto h = build_hamiltonian(m, 8);
  for (double e : {0.3, 2.5, 7.6}) {
    auto w = [&](std::size_t n) {
      const auto lo = wave_coefficients(m, n, e);
      const auto up = wave_coefficients(m, n + 1, e);
      return h.off()[n] * (lo.s * up.c - up.s * lo.c);
    };
    const double w0 = w(0);
    CHECK(w0 != 0.0);
    for (std::size_t n = 1; n <= 6; ++n) CHECK(w(n) == doctest::Approx(w0).epsilon(1e-10));
  }
}

TEST_CASE("s_N vanishes at the truncation eigenvalues") {
  const auto m = table2();
  const auto e = eigenvalues(build_hamiltonian(m, 5));
  for (double eps : e) {
    const auto w5 = wave_coefficients(m, 5, eps);
    const auto w4 = wave_coefficients(m, 4, eps);
    CHECK(std::abs(w5.s) <= 1e-9 * (std::abs(w4.s) + std::abs(w5.c)));
    // With s_5 = 0, Im[1 / R_5^+] = s_4 / c_5.
    const auto inv = 1.0 / r_plus(m, 5, eps);
    CHECK(inv.imag() == doctest::Approx(w4.s / w5.c).epsilon(1e-8));
  }
}

TEST_CASE("reference wave signs and errors") {
  const auto m = ModelProblem::partial_wave(1, 1.0);
  for (int i = 1; i < 50; ++i) CHECK(wave_coefficients(m, 0, 0.1 * i).s > 0.0);
  check_kind([&] { (void)wave_coefficients(m, 0, 0.0); }, NumericalErrorKind::kDomain);
  check_kind([&] { (void)wave_coefficients(m, 0, 1e6); }, NumericalErrorKind::kRange);
  CHECK_THROWS_AS((void)wave_coefficients(ModelProblem::chebyshev_modified(0.0, 0.5), 0, 0.1), PreconditionError);
}

TEST_CASE("closed-form G00") {
  const auto pure = ModelProblem::chebyshev_modified(0.0, 0.5);
  const auto g = green00_exact(pure, 0.0);
  CHECK(g.real() == doctest::Approx(0.0));
  CHECK(g.imag() == doctest::Approx(2.0));

  const auto m = ModelProblem::chebyshev_modified(kThird, kThird);
  for (int i = 0; i < 199; ++i) {
    const double e = -0.99 + i * 0.01;
    CHECK(green00_exact(m, e).imag() > 0.0);
    // Im G00(e + i0) = pi rho(e) for a normalized density.
    CHECK(green00_exact(m, e).imag() == doctest::Approx(pi * density(m, e)).epsilon(1e-13));
  }
  check_kind([&] { (void)green00_exact(m, 1.0); }, NumericalErrorKind::kDomain);
  CHECK_THROWS_AS((void)green00_exact(table2(), 1.0), PreconditionError);
}

TEST_CASE("densities and zeroth moments") {
  const auto pure = ModelProblem::chebyshev_modified(0.0, 0.5);
  CHECK(density(pure, 0.0) == doctest::Approx(2.0 / pi));
  const auto unnormalized = ModelProblem::chebyshev_modified(0.0, 0.5, pi / 2.0);
  CHECK(density(unnormalized, 0.6) == doctest::Approx(0.8));
  CHECK(unnormalized.zeroth_moment() == doctest::Approx(pi / 2.0).epsilon(1e-12));

  // Trapezoid in theta (x = cos theta) is spectrally accurate for this
  // smooth periodic integrand.
  // (-0.3, 0.6) violates |A| <= 1 - 2B^2: a bound state outside [-1, 1]
  // carries part of the unit mass, so the continuum integral falls short.
  for (auto [a, b, mass] : {std::tuple{kThird, kThird, 1.0}, std::tuple{0.2, -0.4, 1.0},
                            std::tuple{-0.3, 0.6, 0.962048}}) {
    const auto m = ModelProblem::chebyshev_modified(a, b);
    const int panels = 4000;
    double sum = 0.0;
    for (int i = 1; i < panels; ++i) {
      const double t = pi * i / panels;
      sum += density(m, std::cos(t)) * std::sin(t);
    }
    sum *= pi / panels;
    CHECK(m.zeroth_moment() == doctest::Approx(sum).epsilon(1e-10));
    CHECK(sum == doctest::Approx(mass).epsilon(mass == 1.0 ? 1e-10 : 1e-6));
  }

  // Partial wave: with y = u^2 the integrand is smooth; composite Simpson.
  for (int ell = 0; ell <= 2; ++ell) {
    const double lambda = 1.3;
    const auto m = ModelProblem::partial_wave(ell, lambda);
    const int panels = 20000;
    const double top = 9.0;  // u, so y up to 81
    const double h = top / panels;
    double sum = 0.0;
    for (int i = 1; i < panels; ++i) {
      const double u = i * h;
      const double e = lambda * lambda * u * u / 2.0;
      const double de_du = lambda * lambda * u;
      sum += (i % 2 == 0 ? 2.0 : 4.0) * density(m, e) * de_du;
    }
    sum *= h / 3.0;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(m.zeroth_moment() == doctest::Approx(1.0).epsilon(1e-10));
  }

  check_kind([&] { (void)density(pure, 1.0); }, NumericalErrorKind::kDomain);
  check_kind([&] { (void)density(table2(), -0.5); }, NumericalErrorKind::kDomain);
}
