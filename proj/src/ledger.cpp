#include "doekit/ledger.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "doekit/strutil.hpp"

namespace doekit {

nlohmann::json ledger_to_json(const ContributionLedger& ledger) {
  nlohmann::json files = nlohmann::json::array();
  for (const auto& [path, loc] : ledger.file_loc)
    files.push_back({{"path", path}, {"size_loc", loc}});

  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [key, contribution] : ledger.pairs) {
    nlohmann::json commits = nlohmann::json::array();
    for (const auto& entry : contribution.per_commit_adds)
      commits.push_back({{"commit", entry.commit_id}, {"adds", entry.adds}});
    pairs.push_back({{"developer", key.developer},
                     {"path", key.path},
                     {"total_adds", contribution.total_adds},
                     {"is_first_author", contribution.is_first_author},
                     {"last_commit_ts", contribution.last_commit_ts},
                     {"per_commit_adds", std::move(commits)}});
  }

  nlohmann::json authors = nlohmann::json::array();
  for (const auto& [id, identity] : ledger.authors) {
    nlohmann::json emails = nlohmann::json::array();
    for (const auto& email : identity.emails) emails.push_back(email);
    authors.push_back({{"canonical_id", id},
                       {"display_name", identity.display_name},
                       {"emails", std::move(emails)}});
  }

  return {{"reference_ts", ledger.reference_ts},
          {"files", std::move(files)},
          {"pairs", std::move(pairs)},
          {"authors", std::move(authors)}};
}

std::string ledger_to_csv(const ContributionLedger& ledger) {
  std::ostringstream out;
  out << "canonical_id,path,adds,fa,last_commit_ts,size_loc\n";
  for (const auto& [key, contribution] : ledger.pairs) {
    auto loc = ledger.file_loc.find(key.path);
    out << csv_escape(key.developer) << ',' << csv_escape(key.path) << ','
        << format_double(contribution.total_adds) << ','
        << (contribution.is_first_author ? 1 : 0) << ','
        << contribution.last_commit_ts << ','
        << (loc != ledger.file_loc.end() ? loc->second : 0) << '\n';
  }
  return out.str();
}

} // namespace doekit
