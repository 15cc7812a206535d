#include "sepcrit/io.hpp"

#include <fstream>
#include <sstream>

namespace sepcrit {

nlohmann::json state_to_json(const DensityMatrix& rho) {
  nlohmann::json j;
  j["dims"] = rho.dims();
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index r = 0; r < rho.side(); ++r)
    for (Eigen::Index c = 0; c < rho.side(); ++c) {
      const Complex v = rho.matrix()(r, c);
      entries.push_back({v.real(), v.imag()});
    }
  j["matrix"] = std::move(entries);
  return j;
}

DensityMatrix state_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("matrix"))
    throw Error("state file needs \"dims\" and \"matrix\" fields");
  std::vector<int> dims;
  try {
    dims = j.at("dims").get<std::vector<int>>();
  } catch (const nlohmann::json::exception&) {
    throw Error("\"dims\" must be a list of integers");
  }
  Eigen::Index n = 1;
  for (int d : dims) n *= d;
  const auto& entries = j.at("matrix");
  if (!entries.is_array() || static_cast<Eigen::Index>(entries.size()) != n * n)
    throw Error("\"matrix\" must hold side^2 [re, im] pairs, row-major");
  ComplexMatrix mat(n, n);
  Eigen::Index flat = 0;
  for (const auto& pair : entries) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      throw Error("matrix entries must be [re, im] pairs");
    mat(flat / n, flat % n) = Complex(pair[0].get<double>(), pair[1].get<double>());
    ++flat;
  }
  return validate_density(mat, std::move(dims));
}

DensityMatrix load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open state file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("cannot parse " + path + ": " + e.what());
  }
  return state_from_json(j);
}

void save_state(const DensityMatrix& rho, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write state file: " + path);
  out << state_to_json(rho).dump(2) << '\n';
}

nlohmann::json report_to_json(const CriterionReport& report) {
  nlohmann::json j;
  j["criterion"] = report.criterion;
  j["lhs"] = report.lhs;
  j["bound"] = report.bound;
  j["margin"] = report.margin;
  j["verdict"] = to_string(report.verdict);
  j["detail"] = report.detail;
  return j;
}

nlohmann::json threshold_to_json(const ThresholdResult& result) {
  nlohmann::json j;
  j["family"] = result.family;
  j["criterion"] = result.criterion;
  j["status"] = to_string(result.status);
  if (result.status == ScanStatus::Found)
    j["threshold"] = result.threshold;
  else
    j["threshold"] = nullptr;
  j["bracket"] = result.bracket;
  j["evaluations"] = result.evaluations;
  return j;
}

std::string threshold_csv_row(const ThresholdResult& result) {
  std::ostringstream row;
  row << result.family << ',' << result.criterion << ',';
  if (result.status == ScanStatus::Found) {
    row.precision(8);
    row << std::fixed << result.threshold;
  } else {
    row << to_string(result.status);
  }
  return row.str();
}

}  // namespace sepcrit
