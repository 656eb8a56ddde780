#include "doekit/mine.hpp"

#include <atomic>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "doekit/errors.hpp"
#include "doekit/strutil.hpp"

namespace doekit {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

} // namespace

std::map<std::string, std::string>
read_corpus(const std::filesystem::path& corpus_dir) {
  if (!std::filesystem::is_directory(corpus_dir))
    throw Error(Errc::IoError, corpus_dir.string() + " is not a directory");
  std::map<std::string, std::string> contents;
  for (const auto& entry :
       std::filesystem::recursive_directory_iterator(corpus_dir)) {
    if (!entry.is_regular_file()) continue;
    std::string relative =
        entry.path().lexically_relative(corpus_dir).generic_string();
    contents[relative] = read_file(entry.path());
  }
  return contents;
}

std::vector<std::string>
load_added_lines(const std::filesystem::path& fixtures_dir,
                 const std::string& url) {
  std::filesystem::path diff = fixtures_dir / share_link_id(url) / "diff.txt";
  return split_lines(read_file(diff));
}

MineOutcome run_mine(const MineConfig& config, PageFetcher& fetcher) {
  std::vector<SharedLinkRecord> records =
      scan_for_links(read_corpus(config.corpus_dir));

  MineOutcome outcome;
  outcome.links_found = records.size();

  struct Slot {
    bool ok = false;
    MatchReport report;
    Errc error = Errc::NetworkError;
  };
  std::vector<Slot> slots(records.size());

  std::atomic<std::size_t> cursor{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t index = cursor.fetch_add(1);
      if (index >= records.size()) return;
      const SharedLinkRecord& record = records[index];
      Slot& slot = slots[index];
      try {
        Conversation conversation = fetch_conversation(record.url, fetcher);
        std::vector<CodeBlock> blocks;
        for (const Turn& turn : conversation.turns)
          for (const CodeBlock& block : turn.code_blocks)
            blocks.push_back(block);
        std::vector<std::string> added =
            load_added_lines(config.fixtures_dir, record.url);
        slot.report = match_lines(blocks, added, config.match_options);
        slot.report.file_path = record.file_path;
        slot.report.url = record.url;
        slot.ok = true;
      } catch (const Error& error) {
        slot.error = error.code();
      }
    }
  };

  std::size_t jobs = std::max<std::size_t>(1, config.jobs);
  jobs = std::min(jobs, std::max<std::size_t>(1, records.size()));
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (std::size_t i = 0; i < jobs; ++i) pool.emplace_back(worker);
  for (std::thread& thread : pool) thread.join();

  for (const Slot& slot : slots) {
    if (slot.ok) {
      outcome.reports.push_back(slot.report);
      continue;
    }
    switch (slot.error) {
    case Errc::LinkDisabled: ++outcome.disabled; break;
    case Errc::NoCodeSnippets: ++outcome.no_snippets; break;
    case Errc::ParseError: ++outcome.parse_errors; break;
    default: ++outcome.network_errors; break;
    }
  }

  for (const MatchReport& report : outcome.reports)
    if (report.matched_lines >= 1) ++outcome.retained;
  if (outcome.retained > 0)
    outcome.copy_stats = aggregate_copy_stats(outcome.reports);
  return outcome;
}

nlohmann::json mine_summary_to_json(const MineOutcome& outcome) {
  nlohmann::json reports = nlohmann::json::array();
  for (const MatchReport& report : outcome.reports) {
    reports.push_back(
        {{"file_path", report.file_path},
         {"url", report.url},
         {"matched_lines", report.matched_lines},
         {"commit_added_lines", report.commit_added_lines},
         {"snippet_lines", report.snippet_lines},
         {"copy_percentage", report.copy_percentage},
         {"secondary_snippet_coverage", report.secondary_snippet_coverage}});
  }
  return {{"links_found", outcome.links_found},
          {"reports", std::move(reports)},
          {"disabled", outcome.disabled},
          {"no_snippets", outcome.no_snippets},
          {"network_errors", outcome.network_errors},
          {"parse_errors", outcome.parse_errors},
          {"retained", outcome.retained},
          {"copy_stats", outcome.copy_stats
                             ? stats::quartile_summary_to_json(*outcome.copy_stats)
                             : nlohmann::json(nullptr)}};
}

} // namespace doekit
