#pragma once

#include <string>

#include <json.hpp>

#include "sepcrit/criteria.hpp"
#include "sepcrit/density.hpp"
#include "sepcrit/scan.hpp"

namespace sepcrit {

// State file layout:
//   {"dims": [d1, ..., dN], "matrix": [[re, im], ...]}
// with the matrix flattened row-major, one [re, im] pair per entry.  Parsing
// runs the full density validation, so a loaded state is as trustworthy as a
// constructed one.
nlohmann::json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const nlohmann::json& j);

DensityMatrix load_state(const std::string& path);
void save_state(const DensityMatrix& rho, const std::string& path);

nlohmann::json report_to_json(const CriterionReport& report);

// {"family", "criterion", "status", "threshold", "bracket", "evaluations"};
// threshold is null unless the status is "found".
nlohmann::json threshold_to_json(const ThresholdResult& result);

// One line of "family,criterion,threshold" with the status token in place of
// a number when no threshold was found.
std::string threshold_csv_row(const ThresholdResult& result);
inline constexpr const char* kThresholdCsvHeader = "family,criterion,threshold";

}  // namespace sepcrit
