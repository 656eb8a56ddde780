#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "doekit/ledger.hpp"

namespace doekit {

// Coefficients of the degree-of-expertise linear model over log-transformed
// contribution features.
namespace doe_model {
inline constexpr double kIntercept = 5.28223;
inline constexpr double kAddsCoeff = 0.23173;
inline constexpr double kFirstAuthorCoeff = 0.36151;
inline constexpr double kSizeCoeff = -0.28761;
inline constexpr double kRecencyCoeff = -0.19421;
} // namespace doe_model

struct DoeInput {
  double adds = 0.0;          // >= 0
  int fa = 0;                 // 0 or 1
  std::int64_t size_loc = 1;  // >= 1
  double num_days = 0.0;      // >= 0, fractional allowed
};

struct DoeOptions {
  // When set, NumDays is floored to whole days before entering the model.
  bool floor_num_days = false;
};

// DOE = intercept + 0.23173*ln(1+Adds) + 0.36151*FA
//       - 0.28761*ln(Size) - 0.19421*ln(1+NumDays)
// Throws Error(DomainError) when size_loc < 1.
double compute_doe(const DoeInput& input);

struct ExpertiseMatrix {
  std::map<PairKey, double> doe;
  std::map<std::string, double> max_doe; // per path
  // doe / max_doe, present only for files whose max DOE is positive.
  std::map<PairKey, double> ndoe;
};

// Applies the model to every ledger pair. NumDays is
// (reference_ts - last_commit_ts) / 86400, real-valued unless the options
// request flooring.
ExpertiseMatrix compute_matrix(const ContributionLedger& ledger,
                               const DoeOptions& options = {});

nlohmann::json matrix_to_json(const ExpertiseMatrix& matrix);
std::string matrix_to_csv(const ExpertiseMatrix& matrix);

} // namespace doekit
