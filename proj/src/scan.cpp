#include "sepcrit/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <memory>
#include <thread>

namespace sepcrit {

std::vector<std::string> criterion_names() {
  return {"ppt", "realignment", "cm", "augmented-cm", "gcm", "augmented-gcm", "tiles-witness"};
}

std::function<CriterionReport(const DensityMatrix&)> criterion_by_name(const std::string& name) {
  if (name == "ppt") {
    return [](const DensityMatrix& rho) {
      std::vector<CriterionReport> reports = ppt(rho);
      std::size_t best = 0;
      for (std::size_t k = 1; k < reports.size(); ++k)
        if (reports[k].margin > reports[best].margin) best = k;
      return reports[best];
    };
  }
  if (name == "realignment") return realignment_criterion;
  if (name == "cm" || name == "gcm") {
    const bool bipartite_only = name == "cm";
    return [bipartite_only](const DensityMatrix& rho) {
      if (bipartite_only && rho.parties() != 2) throw NotBipartite("cm needs two parties");
      return correlation_criterion(rho);
    };
  }
  if (name == "augmented-cm" || name == "augmented-gcm") {
    const bool bipartite_only = name == "augmented-cm";
    return [bipartite_only](const DensityMatrix& rho) {
      if (bipartite_only && rho.parties() != 2)
        throw NotBipartite("augmented-cm needs two parties");
      return augmented_correlation_criterion(rho);
    };
  }
  if (name == "tiles-witness") {
    // One shared witness; evaluation only reads it, so the closure is safe
    // to call from several scan workers at once.
    auto witness = std::make_shared<Witness>(tiles_witness());
    return [witness](const DensityMatrix& rho) {
      CriterionReport rep = witness_criterion(rho, *witness);
      rep.criterion = "tiles-witness";
      return rep;
    };
  }
  throw Error("unknown criterion: " + name);
}

std::string to_string(ScanStatus status) {
  switch (status) {
    case ScanStatus::Found:
      return "found";
    case ScanStatus::AlwaysViolated:
      return "always-violated";
    case ScanStatus::NoCrossing:
      break;
  }
  return "no-crossing";
}

int scan_thread_cap() {
  if (const char* env = std::getenv("SEPCRIT_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

ThresholdResult threshold(const StateFamily& family, const std::string& criterion, int grid,
                          double tol) {
  if (grid < 2) throw Error("grid needs at least two points");
  if (tol <= 0.0) throw Error("tolerance must be positive");
  const auto evaluate = criterion_by_name(criterion);
  const auto margin_at = [&](double x) { return evaluate(family.at(x)).margin; };

  ThresholdResult result;
  result.family = family.name;
  result.criterion = criterion;

  std::vector<double> margins(static_cast<std::size_t>(grid));
  const auto point = [&](int i) {
    return family.lo + (family.hi - family.lo) * i / (grid - 1);
  };
  {
    const int workers = std::min(scan_thread_cap(), grid);
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (int i = next.fetch_add(1); i < grid; i = next.fetch_add(1))
          margins[static_cast<std::size_t>(i)] = margin_at(point(i));
      });
    for (auto& t : pool) t.join();
  }
  result.evaluations = grid;

  int first = -1;
  for (int i = 0; i < grid; ++i)
    if (margins[static_cast<std::size_t>(i)] > kMarginEps) {
      first = i;
      break;
    }
  if (first < 0) {
    result.status = ScanStatus::NoCrossing;
    return result;
  }
  if (first == 0) {
    result.status = ScanStatus::AlwaysViolated;
    return result;
  }

  double lo = point(first - 1), hi = point(first);
  while (hi - lo > tol) {
    const double mid = (lo + hi) / 2.0;
    ++result.evaluations;
    if (margin_at(mid) > kMarginEps)
      hi = mid;
    else
      lo = mid;
  }
  result.status = ScanStatus::Found;
  result.threshold = (lo + hi) / 2.0;
  result.bracket = hi - lo;
  return result;
}

std::vector<ThresholdResult> compare_table(const std::vector<std::string>& family_names,
                                           const std::vector<std::string>& criteria, int grid,
                                           double tol) {
  std::vector<ThresholdResult> rows;
  rows.reserve(family_names.size() * criteria.size());
  for (const auto& fam : family_names)
    for (const auto& crit : criteria) rows.push_back(threshold(family_by_name(fam), crit, grid, tol));
  return rows;
}

}  // namespace sepcrit
