#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "doekit/ledger.hpp"
#include "doekit/truck_factor.hpp"

namespace doekit {

struct ScenarioConfig {
  double impact_fraction = 0.5; // share of each developer's files hit
  double copy_rate = 0.39;      // share of added lines attributed away
  std::uint64_t rng_seed = 0;
  ExpertThresholds thresholds;
  double coverage = 0.5;
};

using AffectedFiles = std::map<std::string, std::set<std::string>>;

struct ScenarioResult {
  TruckFactorResult baseline_tf;
  TruckFactorResult impacted_tf;
  // baseline doe - impacted doe, affected pairs only. Never negative for
  // positive copy rates.
  std::map<PairKey, double> doe_deltas;
  double kendall_tau = 1.0;
  AffectedFiles affected_files;
  std::uint64_t seed_echo = 0;
};

// Per developer touching n files, picks round-half-up(impact_fraction * n)
// of them without replacement. Each developer draws from a substream keyed
// by canonical id, so one developer's selection is independent of who else
// is in the ledger. Every developer gets an entry, possibly empty.
AffectedFiles select_affected_files(const ContributionLedger& ledger,
                                    double impact_fraction,
                                    std::uint64_t rng_seed);

// Returns a new ledger where every per-commit addition on an affected
// (developer, file) pair is scaled by (1 - copy_rate) and the pair total
// re-summed. First-authorship, timestamps, and file sizes are untouched;
// unaffected pairs are bit-identical. Throws Error(UnknownPair) if the
// mapping names a pair the ledger does not have.
ContributionLedger apply_copy_rate(const ContributionLedger& ledger,
                                   const AffectedFiles& affected,
                                   double copy_rate);

// Rank correlation between two removal orders. Developers absent from one
// order are assigned rank len(order)+1 there (tied at the bottom), making
// the comparison total even when membership differs. Identical orders give
// exactly 1.0 without touching the tau machinery, which needs two or more
// items with some spread.
double removal_order_tau(const TruckFactorResult& baseline,
                         const TruckFactorResult& impacted);

// Baseline matrix/TF, selection, deduction, impacted matrix/TF, diff.
// Deterministic given (ledger, config).
ScenarioResult run_scenario(const ContributionLedger& ledger,
                            const ScenarioConfig& config);

struct SweepEntry {
  ScenarioConfig config;
  ScenarioResult result;
};

// One scenario per fraction. Each scenario's seed is derived from the
// master seed and the fraction value, so adding or removing a fraction
// never perturbs the others.
std::vector<SweepEntry> run_sweep(const ContributionLedger& ledger,
                                  const std::vector<double>& fractions,
                                  double copy_rate,
                                  std::uint64_t master_seed,
                                  const ExpertThresholds& thresholds = {},
                                  double coverage = 0.5);

nlohmann::json scenario_result_to_json(const ScenarioResult& result,
                                       const ScenarioConfig& config);

} // namespace doekit
