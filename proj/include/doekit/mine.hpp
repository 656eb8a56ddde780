#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "doekit/fetcher.hpp"
#include "doekit/link_scan.hpp"
#include "doekit/matching.hpp"
#include "doekit/stats.hpp"

namespace doekit {

struct MineConfig {
  std::filesystem::path corpus_dir;   // source files to scan for links
  std::filesystem::path fixtures_dir; // per-link recordings and diffs
  std::size_t jobs = 4;               // concurrent fetches
  MatchOptions match_options;
};

struct MineOutcome {
  std::size_t links_found = 0;
  std::vector<MatchReport> reports; // links that fetched and parsed
  std::size_t disabled = 0;
  std::size_t no_snippets = 0;
  std::size_t network_errors = 0;
  std::size_t parse_errors = 0;
  std::size_t retained = 0; // reports surviving the match filter
  std::optional<stats::QuartileSummary> copy_stats;
};

// Reads every regular file under the directory into a path -> text map,
// paths relative to the root.
std::map<std::string, std::string>
read_corpus(const std::filesystem::path& corpus_dir);

// Added lines of the introducing commit for one link, recorded as
// fixtures_dir/<id>/diff.txt. Missing recording is an IoError.
std::vector<std::string> load_added_lines(const std::filesystem::path& fixtures_dir,
                                          const std::string& url);

// scan -> fetch -> match -> aggregate. Fetches run on `jobs` workers; the
// report order matches the scan order no matter how the fetches
// interleave. Per-link failures are counted, not fatal. copy_stats is
// empty when no report survives the retention filter.
MineOutcome run_mine(const MineConfig& config, PageFetcher& fetcher);

nlohmann::json mine_summary_to_json(const MineOutcome& outcome);

} // namespace doekit
