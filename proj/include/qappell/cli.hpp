#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qappell/report.hpp"

namespace qappell {

enum class OutputFormat { json, csv, latex };

/// Reports produced by one `verify` run. Only `hard` decides `passed`.
struct VerificationSuite {
  std::vector<VerificationReport> hard;
  std::vector<DiscrepancyReport> descriptive;
  bool passed = true;
};

/// Scopes accepted by `verify --scope`.
const std::vector<std::string>& verification_scopes();

/// Runs the checks of one scope for degrees up to max_n, building generators
/// to the given series order. Throws range_error on an unknown scope or an
/// order too small for max_n.
VerificationSuite run_verification(std::string_view scope, int max_n, std::size_t order);

/// Entry point of the qappell tool; args excludes the program name.
/// Exit codes: 0 ok, 1 hard-check failure, 2 invalid arguments, 3 pole.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qappell
