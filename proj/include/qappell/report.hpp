#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qappell/xpoly.hpp"

namespace qappell {

/// Outcome of checking an identity for each degree in [n_first, n_last].
/// residuals[i] belongs to degree n_first + i; the identity holds iff every
/// residual is the zero polynomial.
struct VerificationReport {
  std::string theorem;
  std::string family;
  int n_first = 0;
  int n_last = -1;
  std::vector<XPoly> residuals;
  bool passed = true;
  std::optional<int> first_failure;

  static VerificationReport from_residuals(std::string theorem, std::string family, int n_first,
                                           std::vector<XPoly> residuals);
};

enum class ClaimStatus { confirmed, refuted, inapplicable };

const char* to_string(ClaimStatus s);

/// Whether a formula, taken exactly as printed, holds symbolically.
/// A refuted claim carries its smallest counterexample and the residual there.
struct DiscrepancyReport {
  std::string claim;
  ClaimStatus status = ClaimStatus::inapplicable;
  std::optional<int> counterexample_n;
  std::optional<XPoly> residual;

  /// confirmed iff all residuals vanish; inapplicable for an empty range.
  static DiscrepancyReport from_residuals(std::string claim, int n_first, const std::vector<XPoly>& residuals);
};

}  // namespace qappell
