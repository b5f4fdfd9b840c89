#include "dweights/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "dweights/errors.hpp"

namespace dweights {

SymTridiag::SymTridiag(std::vector<double> diag, std::vector<double> off)
    : diag_(std::move(diag)), off_(std::move(off)) {
  if (diag_.empty()) throw PreconditionError("SymTridiag: dimension must be at least 1");
  if (off_.size() + 1 != diag_.size()) {
    throw PreconditionError("SymTridiag: expected " + std::to_string(diag_.size() - 1) +
                            " off-diagonal entries, got " + std::to_string(off_.size()));
  }
  auto finite = [](double v) { return std::isfinite(v); };
  if (!std::all_of(diag_.begin(), diag_.end(), finite) ||
      !std::all_of(off_.begin(), off_.end(), finite)) {
    throw PreconditionError("SymTridiag: entries must be finite");
  }
}

double SymTridiag::norm() const noexcept {
  const std::size_t n = size();
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = std::abs(diag_[i]);
    if (i > 0) row += std::abs(off_[i - 1]);
    if (i + 1 < n) row += std::abs(off_[i]);
    best = std::max(best, row);
  }
  return best;
}

double SymTridiag::trace() const noexcept {
  return std::accumulate(diag_.begin(), diag_.end(), 0.0);
}

std::vector<double> SymTridiag::apply(std::span<const double> x) const {
  const std::size_t n = size();
  if (x.size() != n) throw PreconditionError("SymTridiag::apply: size mismatch");
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = diag_[i] * x[i];
    if (i > 0) acc += off_[i - 1] * x[i - 1];
    if (i + 1 < n) acc += off_[i] * x[i + 1];
    y[i] = acc;
  }
  return y;
}

EigenSystem::EigenSystem(std::vector<double> values, std::vector<double> vectors)
    : values_(std::move(values)), vectors_(std::move(vectors)) {
  if (vectors_.size() != values_.size() * values_.size()) {
    throw PreconditionError("EigenSystem: vector storage does not match dimension");
  }
}

namespace {

void require_coupled(const SymTridiag& t) {
  const auto off = t.off();
  for (std::size_t i = 0; i < off.size(); ++i) {
    if (off[i] == 0.0) {
      throw PreconditionError("eigh: off-diagonal entry " + std::to_string(i) +
                              " is zero; spectrum may be degenerate");
    }
  }
}

// Implicit QL with Wilkinson-type shifts (after EISPACK tql2). `d` holds the
// diagonal on entry and the unsorted eigenvalues on exit. When `z` is
// non-null it is an n*n row-major matrix that accumulates the rotations;
// column j of z is the eigenvector of d[j].
void ql_implicit(std::vector<double>& d, std::span<const double> off, std::vector<double>* z) {
  const std::size_t n = d.size();
  if (n == 1) return;
  std::vector<double> e(n, 0.0);
  std::copy(off.begin(), off.end(), e.begin());

  constexpr double eps = std::numeric_limits<double>::epsilon();
  double shift_total = 0.0;
  double tst1 = 0.0;

  for (std::size_t l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    std::size_t m = l;
    while (m < n - 1 && std::abs(e[m]) > eps * tst1) ++m;

    if (m > l) {
      int sweeps = 0;
      do {
        if (++sweeps > kMaxQlSweeps) {
          throw NumericalError(NumericalErrorKind::kConvergence,
                               "QL iteration did not converge for eigenvalue " + std::to_string(l) +
                                   " within " + std::to_string(kMaxQlSweeps) + " sweeps");
        }
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
        shift_total += h;

        p = d[m];
        double c = 1.0, c2 = 1.0, c3 = 1.0;
        const double el1 = e[l + 1];
        double s = 0.0, s2 = 0.0;
        for (std::size_t ii = m; ii-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[ii];
          h = c * p;
          r = std::hypot(p, e[ii]);
          e[ii + 1] = s * r;
          s = e[ii] / r;
          c = p / r;
          p = c * d[ii] - s * g;
          d[ii + 1] = h + s * (c * g + s * d[ii]);
          if (z != nullptr) {
            auto& zz = *z;
            for (std::size_t k = 0; k < n; ++k) {
              const double zk1 = zz[k * n + ii + 1];
              zz[k * n + ii + 1] = s * zz[k * n + ii] + c * zk1;
              zz[k * n + ii] = c * zz[k * n + ii] - s * zk1;
            }
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += shift_total;
    e[l] = 0.0;
  }
}

}  // namespace

EigenSystem eigh(const SymTridiag& t) {
  require_coupled(t);
  const std::size_t n = t.size();
  std::vector<double> d(t.diag().begin(), t.diag().end());
  std::vector<double> z(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) z[i * n + i] = 1.0;

  ql_implicit(d, t.off(), &z);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

  std::vector<double> values(n);
  std::vector<double> vectors(n * n);
  for (std::size_t mu = 0; mu < n; ++mu) {
    const std::size_t col = order[mu];
    values[mu] = d[col];
    double* v = vectors.data() + mu * n;
    double norm2 = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      v[k] = z[k * n + col];
      norm2 += v[k] * v[k];
    }
    const double inv = 1.0 / std::sqrt(norm2);
    // Sign convention: first nonzero component positive.
    double sign = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
      if (v[k] != 0.0) {
        sign = v[k] > 0 ? 1.0 : -1.0;
        break;
      }
    }
    for (std::size_t k = 0; k < n; ++k) v[k] *= sign * inv;
  }
  return EigenSystem(std::move(values), std::move(vectors));
}

std::vector<double> eigenvalues(const SymTridiag& t) {
  require_coupled(t);
  std::vector<double> d(t.diag().begin(), t.diag().end());
  ql_implicit(d, t.off(), nullptr);
  std::sort(d.begin(), d.end());
  return d;
}

SymTridiag drop_first(const SymTridiag& t) {
  if (t.size() < 2) throw PreconditionError("drop_first: matrix must have dimension >= 2");
  return SymTridiag({t.diag().begin() + 1, t.diag().end()}, {t.off().begin() + 1, t.off().end()});
}

SymTridiag drop_last(const SymTridiag& t) {
  if (t.size() < 2) throw PreconditionError("drop_last: matrix must have dimension >= 2");
  return SymTridiag({t.diag().begin(), t.diag().end() - 1}, {t.off().begin(), t.off().end() - 1});
}

bool interlace_check(std::span<const double> outer, std::span<const double> inner) {
  if (outer.empty() || inner.size() + 1 != outer.size()) {
    throw PreconditionError("interlace_check: inner must have exactly one fewer entry than outer");
  }
  for (std::size_t k = 0; k < inner.size(); ++k) {
    if (!(outer[k] < inner[k] && inner[k] < outer[k + 1])) return false;
  }
  return true;
}

}  // namespace dweights
