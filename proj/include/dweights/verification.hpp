#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace dweights {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Names accepted by run_check(), in report order:
/// table1, table2, oracle-equivalence, chebyshev-closed-form,
/// green-equivalence, properties, accuracy-ordering.
[[nodiscard]] const std::vector<std::string>& check_names();

/// Run one named check; a check may report several lines. Throws
/// PreconditionError for an unknown name. Numerical exceptions inside a
/// check are reported as a failed line, not propagated.
[[nodiscard]] std::vector<CheckResult> run_check(std::string_view name);

[[nodiscard]] std::vector<CheckResult> run_all_checks();

}  // namespace dweights
