#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "doekit/doe.hpp"
#include "doekit/errors.hpp"
#include "doekit/fetcher.hpp"
#include "doekit/ingest.hpp"
#include "doekit/matching.hpp"
#include "doekit/mine.hpp"
#include "doekit/report.hpp"
#include "doekit/scenario.hpp"
#include "doekit/stats.hpp"
#include "doekit/strutil.hpp"
#include "doekit/truck_factor.hpp"
#include "doekit/version.hpp"

namespace {

struct GlobalFlags {
  std::uint64_t seed = 0;
  std::size_t jobs = 4;
  std::string out_dir = ".";
  std::string format = "json";
};

struct IngestFlags {
  std::string repo;
  std::string ref;
  std::string extensions; // comma separated, empty keeps the default list
  std::string alias_file;
  bool follow_renames = false;
};

struct ThresholdFlags {
  double coverage = 0.5;
  double normalized_min = 0.75;
  double absolute_min = 0.0;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

void add_ingest_flags(CLI::App* cmd, IngestFlags& flags) {
  cmd->add_option("--repo", flags.repo, "path to the git repository")
      ->required();
  cmd->add_option("--ref", flags.ref, "tip reference (default: HEAD)");
  cmd->add_option("--extensions", flags.extensions,
                  "comma-separated extension allow list");
  cmd->add_option("--alias-file", flags.alias_file,
                  "identity alias map (one 'alias canonical' pair per line)");
  cmd->add_flag("--follow-renames", flags.follow_renames,
                "carry contributions across renames");
}

void add_threshold_flags(CLI::App* cmd, ThresholdFlags& flags) {
  cmd->add_option("--coverage", flags.coverage,
                  "abandoned-fraction threshold")
      ->capture_default_str();
  cmd->add_option("--normalized-min", flags.normalized_min,
                  "minimum normalized expertise for file experts")
      ->capture_default_str();
  cmd->add_option("--absolute-min", flags.absolute_min,
                  "minimum absolute expertise for file experts")
      ->capture_default_str();
}

doekit::IngestConfig make_ingest_config(const IngestFlags& flags) {
  doekit::IngestConfig config;
  config.branch = flags.ref;
  config.follow_renames = flags.follow_renames;
  if (!flags.extensions.empty()) {
    config.extensions.clear();
    for (const std::string& token : doekit::split(flags.extensions, ',')) {
      std::string ext = doekit::to_lower(doekit::trim(token));
      if (!ext.empty()) config.extensions.insert(ext);
    }
  }
  if (!flags.alias_file.empty())
    config.alias_map = doekit::load_alias_map(flags.alias_file);
  return config;
}

nlohmann::json ingest_flags_json(const IngestFlags& flags,
                                 const doekit::IngestConfig& config) {
  return {{"repo", flags.repo},
          {"ref", config.branch.empty() ? "HEAD" : config.branch},
          {"extensions", config.extensions},
          {"alias_file", flags.alias_file},
          {"follow_renames", config.follow_renames}};
}

nlohmann::json threshold_flags_json(const ThresholdFlags& flags) {
  return {{"coverage", flags.coverage},
          {"normalized_min", flags.normalized_min},
          {"absolute_min", flags.absolute_min}};
}

std::vector<double> parse_fractions(const std::string& raw) {
  std::vector<double> fractions;
  for (const std::string& token : doekit::split(raw, ',')) {
    std::string value = doekit::trim(token);
    if (value.empty()) continue;
    char* end = nullptr;
    double fraction = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0')
      throw UsageError("not a number in --fractions: '" + value + "'");
    if (fraction < 0.0 || fraction > 1.0)
      throw UsageError("fraction outside [0,1]: " + value);
    fractions.push_back(fraction);
  }
  if (fractions.empty()) throw UsageError("--fractions must name at least one value");
  return fractions;
}

std::filesystem::path out_path(const GlobalFlags& global,
                               const std::string& name) {
  std::filesystem::path dir(global.out_dir);
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw doekit::Error(doekit::Errc::IoError, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int cmd_analyze(const GlobalFlags& global, const IngestFlags& flags,
                bool floor_num_days) {
  doekit::IngestConfig config = make_ingest_config(flags);
  doekit::ContributionLedger ledger =
      doekit::ingest_repository(flags.repo, config);
  doekit::DoeOptions options;
  options.floor_num_days = floor_num_days;
  doekit::ExpertiseMatrix matrix = doekit::compute_matrix(ledger, options);

  nlohmann::json echo = ingest_flags_json(flags, config);
  echo["floor_num_days"] = floor_num_days;
  echo["out_dir"] = global.out_dir;
  echo["format"] = global.format;

  auto ledger_csv = out_path(global, "ledger.csv");
  auto ledger_json = out_path(global, "ledger.json");
  auto matrix_csv = out_path(global, "matrix.csv");
  auto matrix_json = out_path(global, "matrix.json");
  doekit::write_text_file(ledger_csv.string(), doekit::ledger_to_csv(ledger));
  doekit::write_text_file(
      ledger_json.string(),
      doekit::report_to_string(doekit::ledger_report(ledger, echo)));
  doekit::write_text_file(matrix_csv.string(), doekit::matrix_to_csv(matrix));
  doekit::write_text_file(
      matrix_json.string(),
      doekit::report_to_string(doekit::matrix_report(ledger, matrix, echo)));

  std::cout << "wrote " << ledger_csv.string() << "\n"
            << "wrote " << ledger_json.string() << "\n"
            << "wrote " << matrix_csv.string() << "\n"
            << "wrote " << matrix_json.string() << "\n";
  return 0;
}

int cmd_truck_factor(const GlobalFlags& global, const IngestFlags& flags,
                     const ThresholdFlags& thresholds) {
  doekit::IngestConfig config = make_ingest_config(flags);
  doekit::ContributionLedger ledger =
      doekit::ingest_repository(flags.repo, config);
  doekit::ExpertiseMatrix matrix = doekit::compute_matrix(ledger);
  doekit::ExpertThresholds expert_thresholds{thresholds.normalized_min,
                                             thresholds.absolute_min};
  doekit::TruckFactorResult result = doekit::compute_truck_factor(
      doekit::identify_experts(matrix, expert_thresholds),
      thresholds.coverage);

  nlohmann::json echo = ingest_flags_json(flags, config);
  echo.update(threshold_flags_json(thresholds));
  echo["out_dir"] = global.out_dir;
  echo["format"] = global.format;
  nlohmann::json report = doekit::truck_factor_full_report(
      ledger, result, expert_thresholds, thresholds.coverage, echo);

  auto report_path = out_path(global, "truck_factor.json");
  doekit::write_text_file(report_path.string(),
                          doekit::report_to_string(report));

  if (global.format == "csv") {
    std::string csv = "canonical_id,files_expert_of,abandoned_fraction\n";
    for (std::size_t i = 0; i < result.removal_order.size(); ++i) {
      csv += doekit::csv_escape(result.removal_order[i].developer);
      csv += ",";
      csv += std::to_string(result.removal_order[i].files_expert_of);
      csv += ",";
      csv += doekit::format_double(result.abandonment_trace[i]);
      csv += "\n";
    }
    std::cout << csv;
  } else {
    std::cout << doekit::report_to_string(report);
  }
  return 0;
}

int cmd_simulate(const GlobalFlags& global, const IngestFlags& flags,
                 const ThresholdFlags& thresholds,
                 const std::string& fractions_raw, double copy_rate,
                 const std::string& out_file) {
  std::vector<double> fractions = parse_fractions(fractions_raw);
  if (copy_rate < 0.0 || copy_rate > 1.0)
    throw UsageError("--copy-rate outside [0,1]");

  doekit::IngestConfig config = make_ingest_config(flags);
  doekit::ContributionLedger ledger =
      doekit::ingest_repository(flags.repo, config);
  doekit::ExpertThresholds expert_thresholds{thresholds.normalized_min,
                                             thresholds.absolute_min};
  std::vector<doekit::SweepEntry> entries =
      doekit::run_sweep(ledger, fractions, copy_rate, global.seed,
                        expert_thresholds, thresholds.coverage);

  std::string target = out_file.empty()
                           ? out_path(global, "simulate_report.json").string()
                           : out_file;

  nlohmann::json echo = ingest_flags_json(flags, config);
  echo.update(threshold_flags_json(thresholds));
  echo["fractions"] = fractions;
  echo["copy_rate"] = copy_rate;
  echo["seed"] = global.seed;
  echo["out"] = target;
  echo["format"] = global.format;

  nlohmann::json report = doekit::simulate_report(ledger, entries, echo);
  doekit::write_text_file(target, doekit::report_to_string(report));

  std::cout << "baseline_tf "
            << (entries.empty() ? 0 : entries.front().result.baseline_tf.tf)
            << "\n";
  for (const doekit::SweepEntry& entry : entries) {
    std::cout << "fraction " << doekit::format_double(entry.config.impact_fraction)
              << " tf " << entry.result.impacted_tf.tf << " tau "
              << doekit::format_double(entry.result.kendall_tau) << "\n";
  }
  std::cout << "wrote " << target << "\n";
  return 0;
}

int cmd_mine(const GlobalFlags& global, const std::string& corpus,
             const std::string& fixtures, bool live, bool strict_match) {
  doekit::MineConfig config;
  config.corpus_dir = corpus;
  config.fixtures_dir = fixtures;
  config.jobs = global.jobs;
  config.match_options.trim = !strict_match;

  std::unique_ptr<doekit::PageFetcher> fetcher;
  if (live)
    fetcher = std::make_unique<doekit::HttpFetcher>();
  else
    fetcher = std::make_unique<doekit::FixtureFetcher>(config.fixtures_dir);

  doekit::MineOutcome outcome = doekit::run_mine(config, *fetcher);

  nlohmann::json echo = {{"corpus", corpus},
                         {"fixtures", fixtures},
                         {"live", live},
                         {"strict_match", strict_match},
                         {"jobs", global.jobs},
                         {"out_dir", global.out_dir},
                         {"format", global.format}};

  auto csv_path = out_path(global, "matches.csv");
  auto report_path = out_path(global, "mine_report.json");
  doekit::write_text_file(csv_path.string(),
                          doekit::matches_to_csv(outcome.reports));
  doekit::write_text_file(
      report_path.string(),
      doekit::report_to_string(doekit::mine_report(outcome, echo)));

  if (outcome.links_found == 0)
    throw doekit::Error(doekit::Errc::EmptyInput,
                        "no shared links found in corpus");
  if (outcome.reports.empty() && outcome.disabled == outcome.links_found)
    throw doekit::Error(doekit::Errc::LinkDisabled,
                        "all " + std::to_string(outcome.links_found) +
                            " links are disabled");
  if (!outcome.copy_stats)
    throw doekit::Error(doekit::Errc::EmptyAfterFilter,
                        "no report has a matched line longer than one "
                        "character");

  std::cout << doekit::stats::quartile_summary_to_json(*outcome.copy_stats)
                   .dump(2)
            << "\n";
  std::cout << "wrote " << csv_path.string() << "\n"
            << "wrote " << report_path.string() << "\n";
  return 0;
}

int cmd_stats(const std::string& input, const std::string& column) {
  std::vector<std::vector<std::string>> rows =
      doekit::parse_csv(read_text_file(input));
  if (rows.empty())
    throw doekit::Error(doekit::Errc::EmptyInput, input + " is empty");

  const std::vector<std::string>& header = rows.front();
  std::size_t index = header.size();
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == column) index = i;
  if (index == header.size())
    throw UsageError("no column named '" + column + "' in " + input);

  std::vector<double> values;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (index >= rows[r].size()) continue;
    std::string cell = doekit::trim(rows[r][index]);
    if (cell.empty()) continue;
    char* end = nullptr;
    double value = std::strtod(cell.c_str(), &end);
    if (end == cell.c_str() || *end != '\0')
      throw doekit::Error(doekit::Errc::ParseError,
                          "row " + std::to_string(r + 1) +
                              " is not numeric: '" + cell + "'");
    values.push_back(value);
  }

  doekit::stats::QuartileSummary summary = doekit::stats::quartile_summary(values);
  std::cout << doekit::stats::quartile_summary_to_json(summary).dump(2) << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"developer expertise, truck factor, and GenAI copy analysis"};
  app.set_version_flag("--version", doekit::kToolVersion);
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "configuration file (INI; flags win)");

  GlobalFlags global;
  app.add_option("--seed", global.seed, "master random seed")
      ->capture_default_str();
  app.add_option("--jobs", global.jobs, "worker threads for fetching")
      ->capture_default_str();
  app.add_option("--out-dir", global.out_dir, "directory for output files")
      ->capture_default_str();
  app.add_option("--format", global.format, "stdout format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  IngestFlags analyze_ingest;
  bool floor_num_days = false;
  CLI::App* analyze =
      app.add_subcommand("analyze", "compute the contribution ledger and "
                                    "expertise matrix for a repository");
  add_ingest_flags(analyze, analyze_ingest);
  analyze->add_flag("--floor-num-days", floor_num_days,
                    "floor recency to whole days");

  IngestFlags tf_ingest;
  ThresholdFlags tf_thresholds;
  CLI::App* truck_factor =
      app.add_subcommand("truck-factor", "compute the truck factor");
  add_ingest_flags(truck_factor, tf_ingest);
  add_threshold_flags(truck_factor, tf_thresholds);

  IngestFlags sim_ingest;
  ThresholdFlags sim_thresholds;
  std::string fractions = "0.1,0.2,0.3,0.4,0.5";
  double copy_rate = 0.39;
  std::string sim_out;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "sweep attribution-loss scenarios and diff truck factors");
  add_ingest_flags(simulate, sim_ingest);
  add_threshold_flags(simulate, sim_thresholds);
  simulate->add_option("--fractions", fractions,
                       "comma-separated impact fractions")
      ->capture_default_str();
  simulate->add_option("--copy-rate", copy_rate, "uniform copy rate")
      ->capture_default_str();
  simulate->add_option("--out", sim_out, "report file (default: <out-dir>/simulate_report.json)");

  std::string mine_corpus;
  std::string mine_fixtures;
  bool mine_live = false;
  bool strict_match = false;
  CLI::App* mine = app.add_subcommand(
      "mine", "scan a corpus for shared links and compute copy statistics");
  mine->add_option("--corpus", mine_corpus, "directory of source files")
      ->required();
  mine->add_option("--fixtures", mine_fixtures,
                   "directory of recorded pages and diffs")
      ->required();
  mine->add_flag("--live", mine_live, "fetch pages over HTTPS instead of "
                                      "from recordings");
  mine->add_flag("--strict-match", strict_match,
                 "match lines byte-for-byte without trimming");

  std::string stats_input;
  std::string stats_column;
  CLI::App* stats =
      app.add_subcommand("stats", "summarize a CSV column as quartiles");
  stats->add_option("--input", stats_input, "CSV file")->required();
  stats->add_option("--column", stats_column, "column name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*analyze)
      return cmd_analyze(global, analyze_ingest, floor_num_days);
    if (*truck_factor)
      return cmd_truck_factor(global, tf_ingest, tf_thresholds);
    if (*simulate)
      return cmd_simulate(global, sim_ingest, sim_thresholds, fractions,
                          copy_rate, sim_out);
    if (*mine)
      return cmd_mine(global, mine_corpus, mine_fixtures, mine_live,
                      strict_match);
    if (*stats) return cmd_stats(stats_input, stats_column);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const doekit::Error& e) {
    nlohmann::json error = {
        {"error", {{"code", e.code_name()}, {"message", e.what()}}}};
    std::cerr << error.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    nlohmann::json error = {
        {"error", {{"code", "Internal"}, {"message", e.what()}}}};
    std::cerr << error.dump(2) << "\n";
    return 1;
  }
  return 0;
}
