#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dweights {

/// Real symmetric tridiagonal matrix stored as its diagonal and first
/// off-diagonal.
class SymTridiag {
 public:
  /// Throws PreconditionError unless diag is non-empty, off has exactly
  /// diag.size() - 1 entries, and every entry is finite.
  SymTridiag(std::vector<double> diag, std::vector<double> off);

  [[nodiscard]] std::size_t size() const noexcept { return diag_.size(); }
  [[nodiscard]] std::span<const double> diag() const noexcept { return diag_; }
  [[nodiscard]] std::span<const double> off() const noexcept { return off_; }

  /// Infinity norm (max absolute row sum); bounds the spectral norm.
  [[nodiscard]] double norm() const noexcept;
  [[nodiscard]] double trace() const noexcept;

  /// y = T x
  [[nodiscard]] std::vector<double> apply(std::span<const double> x) const;

  friend bool operator==(const SymTridiag&, const SymTridiag&) = default;

 private:
  std::vector<double> diag_;
  std::vector<double> off_;
};

/// Ascending eigenvalues with orthonormal eigenvectors. The eigenvector of
/// values()[mu] is stored contiguously; component(n, mu) is Gamma_{n mu}.
class EigenSystem {
 public:
  EigenSystem(std::vector<double> values, std::vector<double> vectors);

  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
  [[nodiscard]] std::span<const double> vector(std::size_t mu) const noexcept {
    return {vectors_.data() + mu * size(), size()};
  }
  [[nodiscard]] double component(std::size_t n, std::size_t mu) const noexcept {
    return vectors_[mu * size() + n];
  }

 private:
  std::vector<double> values_;
  std::vector<double> vectors_;
};

/// Sweep budget per eigenvalue for the QL iteration.
inline constexpr int kMaxQlSweeps = 30;

/// Full eigendecomposition by implicit-shift QL with accumulated rotations.
/// Requires every off-diagonal entry to be nonzero, which makes the spectrum
/// simple. Eigenvectors are normalized with a positive first nonzero
/// component.
[[nodiscard]] EigenSystem eigh(const SymTridiag& t);

/// Eigenvalues only, same algorithm and ordering as eigh().
[[nodiscard]] std::vector<double> eigenvalues(const SymTridiag& t);

/// Delete the first row and column.
[[nodiscard]] SymTridiag drop_first(const SymTridiag& t);

/// Delete the last row and column (leading principal submatrix).
[[nodiscard]] SymTridiag drop_last(const SymTridiag& t);

/// True iff outer[k] < inner[k] < outer[k+1] for every k.
[[nodiscard]] bool interlace_check(std::span<const double> outer, std::span<const double> inner);

}  // namespace dweights
