#include "doekit/matching.hpp"

#include <map>

#include "doekit/errors.hpp"
#include "doekit/strutil.hpp"

namespace doekit {

MatchReport match_lines(const std::vector<CodeBlock>& snippets,
                        const std::vector<std::string>& added_lines,
                        const MatchOptions& options) {
  auto normalize = [&](const std::string& line) {
    return options.trim ? trim(line) : line;
  };

  std::map<std::string, std::size_t> available;
  for (const std::string& line : added_lines) ++available[normalize(line)];

  MatchReport report;
  report.commit_added_lines = added_lines.size();
  for (const CodeBlock& block : snippets) {
    for (const std::string& line : split_lines(block.body)) {
      ++report.snippet_lines;
      std::string key = normalize(line);
      auto it = available.find(key);
      if (it == available.end() || it->second == 0) continue;
      --it->second;
      if (trim_view(key).size() > 1) ++report.matched_lines;
    }
  }

  if (report.commit_added_lines > 0)
    report.copy_percentage = static_cast<double>(report.matched_lines) /
                             static_cast<double>(report.commit_added_lines);
  if (report.snippet_lines > 0)
    report.secondary_snippet_coverage =
        static_cast<double>(report.matched_lines) /
        static_cast<double>(report.snippet_lines);
  return report;
}

stats::QuartileSummary
aggregate_copy_stats(const std::vector<MatchReport>& reports) {
  std::vector<double> percentages;
  for (const MatchReport& report : reports)
    if (report.matched_lines >= 1)
      percentages.push_back(report.copy_percentage);
  if (percentages.empty())
    throw Error(Errc::EmptyAfterFilter,
                "no report has a matched line longer than one character");
  return stats::quartile_summary(percentages);
}

std::string matches_to_csv(const std::vector<MatchReport>& reports) {
  std::string csv = "pair_id,matched_lines,commit_added_lines,snippet_lines,"
                    "copy_percentage,secondary_snippet_coverage\n";
  for (const MatchReport& report : reports) {
    csv += csv_escape(report.file_path + "::" + report.url);
    csv += ",";
    csv += std::to_string(report.matched_lines);
    csv += ",";
    csv += std::to_string(report.commit_added_lines);
    csv += ",";
    csv += std::to_string(report.snippet_lines);
    csv += ",";
    csv += format_double(report.copy_percentage);
    csv += ",";
    csv += format_double(report.secondary_snippet_coverage);
    csv += "\n";
  }
  return csv;
}

} // namespace doekit
