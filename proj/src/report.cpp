#include "qappell/report.hpp"

namespace qappell {

VerificationReport VerificationReport::from_residuals(std::string theorem, std::string family, int n_first,
                                                      std::vector<XPoly> residuals) {
  VerificationReport r;
  r.theorem = std::move(theorem);
  r.family = std::move(family);
  r.n_first = n_first;
  r.n_last = n_first + static_cast<int>(residuals.size()) - 1;
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    if (!residuals[i].is_zero()) {
      r.passed = false;
      r.first_failure = n_first + static_cast<int>(i);
      break;
    }
  }
  r.residuals = std::move(residuals);
  return r;
}

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::confirmed:
      return "confirmed";
    case ClaimStatus::refuted:
      return "refuted";
    case ClaimStatus::inapplicable:
      return "inapplicable";
  }
  return "inapplicable";
}

DiscrepancyReport DiscrepancyReport::from_residuals(std::string claim, int n_first,
                                                    const std::vector<XPoly>& residuals) {
  DiscrepancyReport r;
  r.claim = std::move(claim);
  if (residuals.empty()) return r;
  r.status = ClaimStatus::confirmed;
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    if (!residuals[i].is_zero()) {
      r.status = ClaimStatus::refuted;
      r.counterexample_n = n_first + static_cast<int>(i);
      r.residual = residuals[i];
      break;
    }
  }
  return r;
}

}  // namespace qappell
