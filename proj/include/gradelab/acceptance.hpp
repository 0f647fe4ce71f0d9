#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gradelab {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
};

struct AcceptanceOptions {
  unsigned jobs = 0;  // 0: hardware concurrency
  std::uint64_t seed = 0x5eed'3c01'd5a7'1995ULL;
  std::size_t samples = 1000;
  /// Criteria to run; empty means all of 1..9.
  std::vector<int> only;
};

/// Golden checks 1..9 for the sl(3) catalog. Each result is passed to
/// on_result as soon as it is known. Exceptions inside a check count as a
/// failure of that check.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS 3 MAD-group cardinalities: ..." style line.
std::string format_result(const CriterionResult& r);

}  // namespace gradelab
