#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "doekit/identity.hpp"
#include "doekit/ledger.hpp"

namespace doekit {

struct IngestConfig {
  std::string branch; // empty -> repository HEAD
  std::set<std::string> extensions = default_extension_allowlist();
  bool follow_renames = false; // default: rename is delete + create
  std::optional<AliasMap> alias_map;

  static std::set<std::string> default_extension_allowlist();
};

// Counts newline-delimited lines; a non-empty final line without a trailing
// newline counts as one line. Throws Error(BinaryFile) on the NUL-byte
// heuristic (first 8000 bytes).
std::int64_t count_file_loc(const std::string& blob);

bool is_binary_blob(const std::string& blob);

// True when the path's extension is in the allow-list (case-insensitive).
bool passes_extension_filter(const std::string& path,
                             const std::set<std::string>& extensions);

// Replays the repository's history into a per-developer, per-file ledger.
// Deterministic: repeated runs over the same repository and config produce
// identical ledgers. Merge commits are diffed against their first parent.
ContributionLedger ingest_repository(const std::string& repo_path,
                                     const IngestConfig& config = {});

// History lookup used by the mining pipeline when the corpus is a git
// repository: the oldest commit whose diff of `path` mentions `needle`,
// along with the lines that commit added to the file.
struct IntroducingCommit {
  std::string commit_id;
  std::vector<std::string> added_lines;
};

std::optional<IntroducingCommit> find_introducing_commit(
    const std::string& repo_path, const std::string& needle,
    const std::string& path);

} // namespace doekit
