#pragma once

#include <array>
#include <cstddef>

namespace dweights::golden {

// Published reference values, as printed (6 decimals for the chebyshev model,
// 8 for the partial-wave model).

/// Chebyshev model, A = B = 1/3, N = 10.
struct Table1Row {
  double energy;
  double heller;
  double broad;
  double jmatrix_interp;
  double jmatrix_exact;
  double exact;
};

inline constexpr double kTable1A = 1.0 / 3.0;
inline constexpr double kTable1B = 1.0 / 3.0;
inline constexpr std::size_t kTable1N = 10;

inline constexpr std::array<Table1Row, 10> kTable1 = {{
    {-0.952972, 0.090485, 0.093250, 0.093250, 0.093250, 0.093250},
    {-0.816684, 0.177423, 0.176970, 0.176970, 0.176970, 0.176970},
    {-0.605168, 0.242124, 0.242319, 0.242319, 0.242319, 0.242319},
    {-0.340783, 0.281642, 0.281475, 0.281475, 0.281475, 0.281475},
    {-0.053421, 0.286715, 0.286976, 0.286976, 0.286976, 0.286976},
    {0.219605, 0.253290, 0.252617, 0.252617, 0.252616, 0.252616},
    {0.447418, 0.205993, 0.207850, 0.207848, 0.207845, 0.207845},
    {0.648931, 0.199704, 0.196699, 0.196695, 0.196688, 0.196688},
    {0.830589, 0.155402, 0.159295, 0.159300, 0.159273, 0.159273},
    {0.955819, 0.096834, 0.085524, 0.085916, 0.087189, 0.087189},
}};

/// Partial-wave model, l = 1, N = 5. The basis scale is not printed with the
/// table; lambda = 1.3 reproduces every eigenvalue to the printed digits.
struct Table2Row {
  double energy;
  double heller;
  double jmatrix_exact;
  double exact;
};

inline constexpr int kTable2Ell = 1;
inline constexpr double kTable2Lambda = 1.3;
inline constexpr std::size_t kTable2N = 5;

inline constexpr std::array<Table2Row, 5> kTable2 = {{
    {0.69089884, 0.97639588, 1.02527960, 1.02527960},
    {2.08912217, 1.80175781, 1.78939724, 1.78939724},
    {4.32302517, 2.70709413, 2.71682237, 2.71682237},
    {7.64230380, 4.03613269, 4.01574624, 4.01574624},
    {12.7171500, 6.36638, 6.50593564, 6.50593564},
}};

}  // namespace dweights::golden
