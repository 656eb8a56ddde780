#include "doekit/report.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "doekit/errors.hpp"
#include "doekit/version.hpp"

namespace doekit {

nlohmann::json run_manifest(const std::string& command,
                            const nlohmann::json& full_config,
                            std::optional<std::int64_t> reference_ts) {
  nlohmann::json timestamps;
  timestamps["reference_ts"] =
      reference_ts ? nlohmann::json(*reference_ts) : nlohmann::json(nullptr);
  return {{"tool", kToolName},
          {"tool_version", kToolVersion},
          {"command", command},
          {"full_config", full_config},
          {"timestamps", timestamps}};
}

nlohmann::json ledger_report(const ContributionLedger& ledger,
                             const nlohmann::json& config) {
  return {{"manifest", run_manifest("analyze", config, ledger.reference_ts)},
          {"ledger", ledger_to_json(ledger)}};
}

nlohmann::json matrix_report(const ContributionLedger& ledger,
                             const ExpertiseMatrix& matrix,
                             const nlohmann::json& config) {
  return {{"manifest", run_manifest("analyze", config, ledger.reference_ts)},
          {"matrix", matrix_to_json(matrix)}};
}

nlohmann::json truck_factor_full_report(const ContributionLedger& ledger,
                                        const TruckFactorResult& result,
                                        const ExpertThresholds& thresholds,
                                        double coverage,
                                        const nlohmann::json& config) {
  return {
      {"manifest", run_manifest("truck-factor", config, ledger.reference_ts)},
      {"truck_factor", truck_factor_report(result, thresholds, coverage)}};
}

nlohmann::json simulate_report(const ContributionLedger& ledger,
                               const std::vector<SweepEntry>& entries,
                               const nlohmann::json& config) {
  nlohmann::json scenarios = nlohmann::json::array();
  nlohmann::json by_fraction = nlohmann::json::array();
  std::size_t baseline_tf = 0;
  for (const SweepEntry& entry : entries) {
    scenarios.push_back(scenario_result_to_json(entry.result, entry.config));
    by_fraction.push_back({{"fraction", entry.config.impact_fraction},
                           {"tf", entry.result.impacted_tf.tf}});
    baseline_tf = entry.result.baseline_tf.tf;
  }
  return {{"manifest", run_manifest("simulate", config, ledger.reference_ts)},
          {"scenarios", std::move(scenarios)},
          {"summary",
           {{"baseline_tf", baseline_tf},
            {"by_fraction", std::move(by_fraction)}}}};
}

nlohmann::json mine_report(const MineOutcome& outcome,
                           const nlohmann::json& config) {
  return {{"manifest", run_manifest("mine", config, std::nullopt)},
          {"mine", mine_summary_to_json(outcome)}};
}

std::string report_to_string(const nlohmann::json& report) {
  return report.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot open " + path + " for writing");
  out << content;
  if (!out) throw Error(Errc::IoError, "short write to " + path);
}

} // namespace doekit
