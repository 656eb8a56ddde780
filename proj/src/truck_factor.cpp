#include "doekit/truck_factor.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "doekit/errors.hpp"

namespace doekit {

ExpertAssignment identify_experts(const ExpertiseMatrix& matrix,
                                  const ExpertThresholds& thresholds) {
  ExpertAssignment assignment;
  assignment.total_files = matrix.max_doe.size();
  for (const auto& [key, ndoe] : matrix.ndoe) {
    if (ndoe < thresholds.normalized_min) continue;
    double doe = matrix.doe.at(key);
    if (doe <= thresholds.absolute_min) continue;
    assignment.experts[key.path].insert(key.developer);
  }
  return assignment;
}

TruckFactorResult compute_truck_factor(const ExpertAssignment& assignment,
                                       double coverage) {
  if (assignment.total_files == 0)
    throw Error(Errc::NoFiles, "assignment covers zero files");

  // Working copy: only files that still have experts. Everything else is
  // abandoned, including files that never had an expert.
  std::map<std::string, std::set<std::string>> remaining;
  for (const auto& [path, devs] : assignment.experts)
    if (!devs.empty()) remaining[path] = devs;

  const double total = static_cast<double>(assignment.total_files);
  std::size_t abandoned = assignment.total_files - remaining.size();

  TruckFactorResult result;
  while (abandoned / total <= coverage && !remaining.empty()) {
    // Count non-abandoned files per developer.
    std::map<std::string, std::size_t> load;
    for (const auto& [path, devs] : remaining)
      for (const auto& dev : devs) ++load[dev];

    // Most files first; ascending id on ties. std::map iteration is already
    // id-ascending, so the first strict improvement wins.
    auto best = load.begin();
    for (auto it = std::next(load.begin()); it != load.end(); ++it)
      if (it->second > best->second) best = it;

    result.removal_order.push_back({best->first, best->second});
    for (auto it = remaining.begin(); it != remaining.end();) {
      it->second.erase(best->first);
      if (it->second.empty()) {
        it = remaining.erase(it);
        ++abandoned;
      } else {
        ++it;
      }
    }
    result.abandonment_trace.push_back(abandoned / total);
  }

  result.tf = result.removal_order.size();
  result.exhausted = remaining.empty() && abandoned / total <= coverage;
  return result;
}

nlohmann::json truck_factor_report(const TruckFactorResult& result,
                                   const ExpertThresholds& thresholds,
                                   double coverage) {
  nlohmann::json order = nlohmann::json::array();
  for (const auto& step : result.removal_order)
    order.push_back({{"developer", step.developer},
                     {"files", step.files_expert_of}});
  return {{"tf", result.tf},
          {"coverage", coverage},
          {"thresholds",
           {{"normalized_min", thresholds.normalized_min},
            {"absolute_min", thresholds.absolute_min}}},
          {"removal_order", std::move(order)},
          {"abandonment_trace", result.abandonment_trace},
          {"exhausted", result.exhausted}};
}

} // namespace doekit
