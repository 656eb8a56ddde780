#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "doekit/conversation.hpp"
#include "doekit/stats.hpp"

namespace doekit {

struct MatchReport {
  std::string file_path;
  std::string url;
  std::size_t matched_lines = 0;
  std::size_t commit_added_lines = 0;
  std::size_t snippet_lines = 0;
  double copy_percentage = 0.0;          // matched / commit_added_lines
  double secondary_snippet_coverage = 0.0; // matched / snippet_lines
};

struct MatchOptions {
  // Trim leading/trailing whitespace before comparing. Off means strict
  // byte equality.
  bool trim = true;
};

// Exact line matching between conversation code blocks and the lines a
// commit added. Each added line can be consumed by at most one snippet
// line, so the match count for a value is min(occurrences on each side).
// Matches whose trimmed length is one character or less are excluded from
// matched_lines. file_path and url are left for the caller.
MatchReport match_lines(const std::vector<CodeBlock>& snippets,
                        const std::vector<std::string>& added_lines,
                        const MatchOptions& options = {});

// Keeps reports with at least one (multi-character) matched line and
// summarizes their copy percentages. Throws Error(EmptyAfterFilter) when
// nothing survives.
stats::QuartileSummary
aggregate_copy_stats(const std::vector<MatchReport>& reports);

std::string matches_to_csv(const std::vector<MatchReport>& reports);

} // namespace doekit
