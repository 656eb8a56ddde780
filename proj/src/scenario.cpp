#include "doekit/scenario.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "doekit/doe.hpp"
#include "doekit/errors.hpp"
#include "doekit/rng.hpp"
#include "doekit/stats.hpp"
#include "doekit/strutil.hpp"

namespace doekit {

namespace {

std::size_t files_to_affect(double fraction, std::size_t n) {
  return static_cast<std::size_t>(
      std::floor(fraction * static_cast<double>(n) + 0.5));
}

std::vector<std::string> removal_ids(const TruckFactorResult& result) {
  std::vector<std::string> ids;
  ids.reserve(result.removal_order.size());
  for (const auto& step : result.removal_order) ids.push_back(step.developer);
  return ids;
}

} // namespace

AffectedFiles select_affected_files(const ContributionLedger& ledger,
                                    double impact_fraction,
                                    std::uint64_t rng_seed) {
  if (impact_fraction < 0.0 || impact_fraction > 1.0)
    throw Error(Errc::DomainError, "impact_fraction outside [0,1]");

  std::map<std::string, std::vector<std::string>> files_by_dev;
  for (const auto& [key, contribution] : ledger.pairs) {
    (void)contribution;
    files_by_dev[key.developer].push_back(key.path);
  }

  AffectedFiles affected;
  for (const auto& [developer, files] : files_by_dev) {
    // Map iteration already yields the paths in ascending order, which is
    // what pins the index -> file assignment across runs.
    std::size_t k = files_to_affect(impact_fraction, files.size());
    SplitMix64 rng = substream(rng_seed, developer);
    std::set<std::string>& chosen = affected[developer];
    for (std::size_t index : sample_without_replacement(rng, files.size(), k))
      chosen.insert(files[index]);
  }
  return affected;
}

ContributionLedger apply_copy_rate(const ContributionLedger& ledger,
                                   const AffectedFiles& affected,
                                   double copy_rate) {
  if (copy_rate < 0.0 || copy_rate > 1.0)
    throw Error(Errc::DomainError, "copy_rate outside [0,1]");

  ContributionLedger adjusted = ledger;
  const double keep = 1.0 - copy_rate;
  for (const auto& [developer, files] : affected) {
    for (const auto& path : files) {
      auto it = adjusted.pairs.find(PairKey{developer, path});
      if (it == adjusted.pairs.end())
        throw Error(Errc::UnknownPair, developer + " / " + path);
      PairContribution& pair = it->second;
      double total = 0.0;
      for (CommitAdd& entry : pair.per_commit_adds) {
        entry.adds *= keep;
        total += entry.adds;
      }
      pair.total_adds = total;
    }
  }
  return adjusted;
}

double removal_order_tau(const TruckFactorResult& baseline,
                         const TruckFactorResult& impacted) {
  std::vector<std::string> order_a = removal_ids(baseline);
  std::vector<std::string> order_b = removal_ids(impacted);
  if (order_a == order_b) return 1.0;

  std::set<std::string> everyone(order_a.begin(), order_a.end());
  everyone.insert(order_b.begin(), order_b.end());

  auto rank_in = [](const std::vector<std::string>& order,
                    const std::string& id) {
    auto it = std::find(order.begin(), order.end(), id);
    if (it == order.end()) return static_cast<double>(order.size() + 1);
    return static_cast<double>(it - order.begin() + 1);
  };

  std::vector<double> ranks_a;
  std::vector<double> ranks_b;
  ranks_a.reserve(everyone.size());
  ranks_b.reserve(everyone.size());
  for (const auto& id : everyone) {
    ranks_a.push_back(rank_in(order_a, id));
    ranks_b.push_back(rank_in(order_b, id));
  }
  return stats::kendall_tau_ranks(ranks_a, ranks_b);
}

ScenarioResult run_scenario(const ContributionLedger& ledger,
                            const ScenarioConfig& config) {
  ExpertiseMatrix baseline = compute_matrix(ledger);
  ScenarioResult result;
  result.baseline_tf = compute_truck_factor(
      identify_experts(baseline, config.thresholds), config.coverage);

  result.affected_files =
      select_affected_files(ledger, config.impact_fraction, config.rng_seed);
  ContributionLedger adjusted =
      apply_copy_rate(ledger, result.affected_files, config.copy_rate);
  ExpertiseMatrix impacted = compute_matrix(adjusted);
  result.impacted_tf = compute_truck_factor(
      identify_experts(impacted, config.thresholds), config.coverage);

  for (const auto& [developer, files] : result.affected_files) {
    for (const auto& path : files) {
      PairKey key{developer, path};
      result.doe_deltas[key] = baseline.doe.at(key) - impacted.doe.at(key);
    }
  }
  result.kendall_tau = removal_order_tau(result.baseline_tf, result.impacted_tf);
  result.seed_echo = config.rng_seed;
  return result;
}

std::vector<SweepEntry> run_sweep(const ContributionLedger& ledger,
                                  const std::vector<double>& fractions,
                                  double copy_rate,
                                  std::uint64_t master_seed,
                                  const ExpertThresholds& thresholds,
                                  double coverage) {
  std::vector<SweepEntry> entries;
  entries.reserve(fractions.size());
  for (double fraction : fractions) {
    SweepEntry entry;
    entry.config.impact_fraction = fraction;
    entry.config.copy_rate = copy_rate;
    entry.config.rng_seed =
        substream(master_seed, "fraction:" + format_double(fraction)).next();
    entry.config.thresholds = thresholds;
    entry.config.coverage = coverage;
    entry.result = run_scenario(ledger, entry.config);
    entries.push_back(std::move(entry));
  }
  return entries;
}

nlohmann::json scenario_result_to_json(const ScenarioResult& result,
                                       const ScenarioConfig& config) {
  nlohmann::json affected = nlohmann::json::object();
  for (const auto& [developer, files] : result.affected_files)
    affected[developer] = files;

  nlohmann::json deltas = nlohmann::json::array();
  for (const auto& [key, delta] : result.doe_deltas) {
    deltas.push_back({{"canonical_id", key.developer},
                      {"path", key.path},
                      {"delta", delta}});
  }

  return {{"config",
           {{"impact_fraction", config.impact_fraction},
            {"copy_rate", config.copy_rate},
            {"rng_seed", config.rng_seed},
            {"normalized_min", config.thresholds.normalized_min},
            {"absolute_min", config.thresholds.absolute_min},
            {"coverage", config.coverage}}},
          {"baseline_tf",
           truck_factor_report(result.baseline_tf, config.thresholds,
                               config.coverage)},
          {"impacted_tf",
           truck_factor_report(result.impacted_tf, config.thresholds,
                               config.coverage)},
          {"doe_deltas", deltas},
          {"kendall_tau", result.kendall_tau},
          {"affected_files", affected},
          {"seed_echo", result.seed_echo}};
}

} // namespace doekit
