#include "doekit/doe.hpp"

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "doekit/errors.hpp"
#include "doekit/strutil.hpp"

namespace doekit {

double compute_doe(const DoeInput& input) {
  if (input.size_loc < 1)
    throw Error(Errc::DomainError,
                "size_loc must be >= 1, got " + std::to_string(input.size_loc));
  using namespace doe_model;
  return kIntercept + kAddsCoeff * std::log1p(input.adds) +
         kFirstAuthorCoeff * static_cast<double>(input.fa) +
         kSizeCoeff * std::log(static_cast<double>(input.size_loc)) +
         kRecencyCoeff * std::log1p(input.num_days);
}

ExpertiseMatrix compute_matrix(const ContributionLedger& ledger,
                               const DoeOptions& options) {
  ExpertiseMatrix matrix;
  for (const auto& [key, contribution] : ledger.pairs) {
    auto loc_it = ledger.file_loc.find(key.path);
    if (loc_it == ledger.file_loc.end() || loc_it->second < 1)
      throw Error(Errc::DomainError, "no valid size for pair (" +
                                         key.developer + ", " + key.path + ")");
    DoeInput input;
    input.adds = contribution.total_adds;
    input.fa = contribution.is_first_author ? 1 : 0;
    input.size_loc = loc_it->second;
    double seconds =
        static_cast<double>(ledger.reference_ts - contribution.last_commit_ts);
    input.num_days = seconds / 86400.0;
    if (options.floor_num_days) input.num_days = std::floor(input.num_days);
    if (input.num_days < 0)
      throw Error(Errc::DomainError, "negative num_days for pair (" +
                                         key.developer + ", " + key.path + ")");

    double value = compute_doe(input);
    matrix.doe[key] = value;
    auto [max_it, inserted] = matrix.max_doe.emplace(key.path, value);
    if (!inserted && value > max_it->second) max_it->second = value;
  }

  for (const auto& [key, value] : matrix.doe) {
    double file_max = matrix.max_doe.at(key.path);
    if (file_max > 0.0) matrix.ndoe[key] = value / file_max;
  }
  return matrix;
}

nlohmann::json matrix_to_json(const ExpertiseMatrix& matrix) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, value] : matrix.doe) {
    nlohmann::json entry = {{"developer", key.developer},
                            {"path", key.path},
                            {"doe", value}};
    if (auto it = matrix.ndoe.find(key); it != matrix.ndoe.end())
      entry["ndoe"] = it->second;
    else
      entry["ndoe"] = nullptr;
    entries.push_back(std::move(entry));
  }
  return {{"entries", std::move(entries)}};
}

std::string matrix_to_csv(const ExpertiseMatrix& matrix) {
  std::ostringstream out;
  out << "canonical_id,path,doe,ndoe\n";
  for (const auto& [key, value] : matrix.doe) {
    out << csv_escape(key.developer) << ',' << csv_escape(key.path) << ','
        << format_double(value) << ',';
    if (auto it = matrix.ndoe.find(key); it != matrix.ndoe.end())
      out << format_double(it->second);
    out << '\n';
  }
  return out.str();
}

} // namespace doekit
