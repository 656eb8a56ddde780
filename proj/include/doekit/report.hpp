#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "doekit/doe.hpp"
#include "doekit/ledger.hpp"
#include "doekit/mine.hpp"
#include "doekit/scenario.hpp"
#include "doekit/truck_factor.hpp"

namespace doekit {

// Every report carries enough to rerun it exactly: tool version, the
// command, and the full parameter set. The only timestamp is the
// repository-derived reference time, never the wall clock, so a rerun is
// byte-identical.
nlohmann::json run_manifest(const std::string& command,
                            const nlohmann::json& full_config,
                            std::optional<std::int64_t> reference_ts);

nlohmann::json ledger_report(const ContributionLedger& ledger,
                             const nlohmann::json& config);

nlohmann::json matrix_report(const ContributionLedger& ledger,
                             const ExpertiseMatrix& matrix,
                             const nlohmann::json& config);

nlohmann::json truck_factor_full_report(const ContributionLedger& ledger,
                                        const TruckFactorResult& result,
                                        const ExpertThresholds& thresholds,
                                        double coverage,
                                        const nlohmann::json& config);

// Sweep report: manifest, one scenario block per fraction, and a summary
// row (baseline TF plus impacted TF per fraction).
nlohmann::json simulate_report(const ContributionLedger& ledger,
                               const std::vector<SweepEntry>& entries,
                               const nlohmann::json& config);

nlohmann::json mine_report(const MineOutcome& outcome,
                           const nlohmann::json& config);

// Serialized form used for every emitted report file.
std::string report_to_string(const nlohmann::json& report);

void write_text_file(const std::string& path, const std::string& content);

} // namespace doekit
