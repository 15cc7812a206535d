#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sepcrit/catalog.hpp"
#include "sepcrit/criteria.hpp"

namespace sepcrit {

// Single-report criterion evaluators addressable by name, for the scanner
// and the CLI.  "ppt" on a multipartite state collapses to its most
// detecting bipartition.  Unknown names raise Error; criteria that need two
// parties fail on other arities when invoked.
std::vector<std::string> criterion_names();
std::function<CriterionReport(const DensityMatrix&)> criterion_by_name(const std::string& name);

enum class ScanStatus { Found, NoCrossing, AlwaysViolated };

std::string to_string(ScanStatus status);

struct ThresholdResult {
  std::string family;
  std::string criterion;
  ScanStatus status = ScanStatus::NoCrossing;
  double threshold = 0.0;  // meaningful only when status == Found
  double bracket = 0.0;    // final bisection bracket width
  int evaluations = 0;
};

// Finds where the family's margin first crosses the violation line: a coarse
// grid locates the first violated point, bisection tightens the bracket to
// tol.  Violated at the very first grid point reports AlwaysViolated, never
// violated reports NoCrossing.  Grid evaluations run in parallel, capped by
// the SEPCRIT_THREADS environment variable; results do not depend on the
// thread count, and a Found threshold moves by less than tol under a denser
// grid as long as the margin crosses only once.
ThresholdResult threshold(const StateFamily& family, const std::string& criterion, int grid = 201,
                          double tol = 1e-6);

// Cross product of families x criteria.
std::vector<ThresholdResult> compare_table(const std::vector<std::string>& family_names,
                                           const std::vector<std::string>& criteria,
                                           int grid = 201, double tol = 1e-6);

// Worker cap: SEPCRIT_THREADS when set to a positive integer, otherwise the
// hardware concurrency.
int scan_thread_cap();

}  // namespace sepcrit
