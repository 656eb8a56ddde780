#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "doekit/identity.hpp"

namespace doekit {

struct FileChange {
  std::string path;
  std::string old_path; // only set for renames (follow-renames mode)
  std::int64_t lines_added = 0;
  std::int64_t lines_deleted = 0;
  bool is_creation = false;
  bool is_deletion = false;
  bool is_rename = false;
  bool is_binary = false;
};

struct CommitRecord {
  std::string commit_id;
  AuthorIdentity author;
  std::int64_t timestamp = 0; // UTC seconds since epoch
  std::vector<FileChange> changes;
};

struct PairKey {
  std::string developer; // canonical id
  std::string path;

  auto operator<=>(const PairKey&) const = default;
};

struct CommitAdd {
  std::string commit_id;
  double adds = 0.0; // real-valued after scenario adjustment
};

struct PairContribution {
  double total_adds = 0.0;
  bool is_first_author = false;
  std::int64_t last_commit_ts = 0;
  std::vector<CommitAdd> per_commit_adds;
};

// Per developer-file contribution totals at a reference version, the raw
// material for the expertise model. Immutable once built; ordered maps keep
// every export byte-deterministic.
struct ContributionLedger {
  std::map<PairKey, PairContribution> pairs;
  std::map<std::string, std::int64_t> file_loc; // path -> LOC at reference
  std::map<std::string, AuthorIdentity> authors; // canonical id -> identity
  std::int64_t reference_ts = 0; // timestamp of the newest analyzed commit

  bool has_pair(const PairKey& key) const { return pairs.count(key) > 0; }
};

nlohmann::json ledger_to_json(const ContributionLedger& ledger);
std::string ledger_to_csv(const ContributionLedger& ledger);

} // namespace doekit
