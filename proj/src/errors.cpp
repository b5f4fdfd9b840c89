#include "dweights/errors.hpp"

namespace dweights {

std::string_view to_string(NumericalErrorKind kind) noexcept {
  switch (kind) {
    case NumericalErrorKind::kConvergence: return "convergence";
    case NumericalErrorKind::kFitDegeneracy: return "fit degeneracy";
    case NumericalErrorKind::kPole: return "pole";
    case NumericalErrorKind::kDomain: return "domain";
    case NumericalErrorKind::kRange: return "range";
    case NumericalErrorKind::kBranch: return "branch";
    case NumericalErrorKind::kInterleave: return "interleave";
    case NumericalErrorKind::kConvention: return "convention";
    case NumericalErrorKind::kDensity: return "density";
    case NumericalErrorKind::kDegeneracy: return "degeneracy";
  }
  return "numerical";
}

}  // namespace dweights
