#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "doekit/doe.hpp"

namespace doekit {

struct ExpertThresholds {
  // A developer is an expert of a file iff ndoe >= normalized_min and
  // doe > absolute_min. Both are configuration, never baked into reports
  // without being echoed.
  double normalized_min = 0.75;
  double absolute_min = 0.0;
};

struct ExpertAssignment {
  std::map<std::string, std::set<std::string>> experts; // path -> developers
  std::size_t total_files = 0;
};

struct RemovalStep {
  std::string developer;
  std::size_t files_expert_of = 0; // non-abandoned files at removal time
};

struct TruckFactorResult {
  std::size_t tf = 0;
  std::vector<RemovalStep> removal_order;
  std::vector<double> abandonment_trace; // abandoned fraction after each removal
  bool exhausted = false; // every expert removed without crossing coverage
};

ExpertAssignment identify_experts(const ExpertiseMatrix& matrix,
                                  const ExpertThresholds& thresholds = {});

// Greedy removal: repeatedly drop the developer who is expert of the most
// non-abandoned files (ties broken by ascending id) until the abandoned
// fraction exceeds `coverage`. Files with no experts count as abandoned
// from the start.
TruckFactorResult compute_truck_factor(const ExpertAssignment& assignment,
                                       double coverage = 0.5);

nlohmann::json truck_factor_report(const TruckFactorResult& result,
                                   const ExpertThresholds& thresholds,
                                   double coverage);

} // namespace doekit
