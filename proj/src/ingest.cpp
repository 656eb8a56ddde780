#include "doekit/ingest.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include <unistd.h>

#include "doekit/errors.hpp"
#include "doekit/strutil.hpp"
#include "doekit/subprocess.hpp"

namespace doekit {

namespace {

constexpr size_t kBinarySniffBytes = 8000;

// Keeps user/system git config out of parsing-sensitive commands.
RunOptions isolated_git_env() {
  RunOptions options;
  options.extra_env["GIT_CONFIG_GLOBAL"] = "/dev/null";
  options.extra_env["GIT_CONFIG_SYSTEM"] = "/dev/null";
  options.extra_env["GIT_TERMINAL_PROMPT"] = "0";
  return options;
}

RunResult run_git(const std::string& repo,
                  const std::vector<std::string>& args,
                  const std::optional<std::string>& stdin_file = {}) {
  std::vector<std::string> argv = {"git", "-C", repo, "-c",
                                   "core.quotePath=false"};
  argv.insert(argv.end(), args.begin(), args.end());
  RunOptions options = isolated_git_env();
  options.stdin_file = stdin_file;
  return run_process(argv, options);
}

class TempFile {
public:
  explicit TempFile(const std::string& contents) {
    char tmpl[] = "/tmp/doekit-batch-XXXXXX";
    int fd = mkstemp(tmpl);
    if (fd < 0) throw Error(Errc::IoError, "mkstemp failed");
    path_ = tmpl;
    std::string remaining = contents;
    const char* data = remaining.data();
    size_t left = remaining.size();
    while (left > 0) {
      ssize_t n = write(fd, data, left);
      if (n <= 0) {
        close(fd);
        throw Error(Errc::IoError, "temp file write failed");
      }
      data += n;
      left -= static_cast<size_t>(n);
    }
    close(fd);
  }
  ~TempFile() { ::unlink(path_.c_str()); }
  const std::string& path() const { return path_; }

private:
  std::string path_;
};

// Reverses git's C-style quoting of unusual path names.
std::string unquote_git_path(std::string_view raw) {
  if (raw.size() < 2 || raw.front() != '"' || raw.back() != '"')
    return std::string(raw);
  std::string out;
  out.reserve(raw.size());
  for (size_t i = 1; i + 1 < raw.size(); ++i) {
    char c = raw[i];
    if (c != '\\') {
      out += c;
      continue;
    }
    ++i;
    if (i + 1 > raw.size()) break;
    char esc = raw[i];
    switch (esc) {
    case 'n': out += '\n'; break;
    case 't': out += '\t'; break;
    case 'r': out += '\r'; break;
    case '\\': out += '\\'; break;
    case '"': out += '"'; break;
    default:
      if (esc >= '0' && esc <= '7' && i + 2 < raw.size()) {
        int value = (esc - '0') * 64 + (raw[i + 1] - '0') * 8 + (raw[i + 2] - '0');
        out += static_cast<char>(value);
        i += 2;
      } else {
        out += esc;
      }
    }
  }
  return out;
}

// Expands numstat's rename syntax ("a => b", "pre{a => b}post") to the
// post-rename path.
std::string numstat_new_path(const std::string& field) {
  auto open = field.find('{');
  auto arrow = field.find(" => ");
  if (arrow == std::string::npos) return field;
  if (open != std::string::npos) {
    auto close = field.find('}', open);
    if (close != std::string::npos && arrow > open && arrow < close) {
      std::string inner = field.substr(arrow + 4, close - (arrow + 4));
      std::string joined = field.substr(0, open) + inner + field.substr(close + 1);
      std::string collapsed;
      collapsed.reserve(joined.size());
      for (char c : joined) {
        if (c == '/' && !collapsed.empty() && collapsed.back() == '/') continue;
        collapsed += c;
      }
      return collapsed;
    }
  }
  return field.substr(arrow + 4);
}

struct RawEntry {
  char status = 'M';
  std::string path;     // post-change path
  std::string old_path; // renames only
};

std::optional<RawEntry> parse_raw_line(const std::string& line) {
  if (line.empty() || line[0] != ':') return std::nullopt;
  auto tab = line.find('\t');
  if (tab == std::string::npos) return std::nullopt;
  std::string head = line.substr(1, tab - 1);
  std::vector<std::string> fields = split(head, ' ');
  fields.erase(std::remove(fields.begin(), fields.end(), std::string()),
               fields.end());
  if (fields.size() < 5) return std::nullopt;
  const std::string& status_token = fields[4];
  RawEntry entry;
  entry.status = status_token.empty() ? 'M' : status_token[0];
  std::vector<std::string> paths = split(line.substr(tab + 1), '\t');
  if (paths.empty()) return std::nullopt;
  if ((entry.status == 'R' || entry.status == 'C') && paths.size() >= 2) {
    entry.old_path = unquote_git_path(paths[0]);
    entry.path = unquote_git_path(paths[1]);
  } else {
    entry.path = unquote_git_path(paths[0]);
  }
  return entry;
}

struct NumstatEntry {
  std::int64_t added = 0;
  std::int64_t deleted = 0;
  bool binary = false;
  std::string path; // post-change path
};

std::optional<NumstatEntry> parse_numstat_line(const std::string& line) {
  if (line.empty()) return std::nullopt;
  auto tab1 = line.find('\t');
  if (tab1 == std::string::npos) return std::nullopt;
  auto tab2 = line.find('\t', tab1 + 1);
  if (tab2 == std::string::npos) return std::nullopt;
  std::string added = line.substr(0, tab1);
  std::string deleted = line.substr(tab1 + 1, tab2 - tab1 - 1);
  auto is_count = [](const std::string& s) {
    if (s == "-") return true;
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
  };
  if (!is_count(added) || !is_count(deleted)) return std::nullopt;
  NumstatEntry entry;
  if (added == "-" || deleted == "-") {
    entry.binary = true;
  } else {
    entry.added = std::stoll(added);
    entry.deleted = std::stoll(deleted);
  }
  entry.path = numstat_new_path(unquote_git_path(line.substr(tab2 + 1)));
  return entry;
}

struct RawCommit {
  std::string hash;
  std::string author_name;
  std::string author_email;
  std::int64_t timestamp = 0;
  std::vector<RawEntry> raw_entries;
  std::vector<NumstatEntry> numstat_entries;
};

std::vector<FileChange> merge_commit_changes(const RawCommit& commit) {
  std::vector<FileChange> changes;
  changes.reserve(commit.numstat_entries.size());
  std::map<std::string, const RawEntry*> by_path;
  for (const auto& entry : commit.raw_entries) by_path[entry.path] = &entry;

  for (const auto& numstat : commit.numstat_entries) {
    FileChange change;
    change.path = numstat.path;
    change.lines_added = numstat.added;
    change.lines_deleted = numstat.deleted;
    change.is_binary = numstat.binary;
    if (auto it = by_path.find(numstat.path); it != by_path.end()) {
      const RawEntry& raw = *it->second;
      change.is_creation = raw.status == 'A';
      change.is_deletion = raw.status == 'D';
      change.is_rename = raw.status == 'R';
      change.old_path = raw.old_path;
    }
    changes.push_back(std::move(change));
  }
  return changes;
}

std::string resolve_tip(const std::string& repo, const std::string& branch) {
  RunResult git_dir = run_git(repo, {"rev-parse", "--git-dir"});
  if (!git_dir.ok())
    throw Error(Errc::NotARepository, repo + " is not a git repository");
  std::string ref = branch.empty() ? "HEAD" : branch;
  RunResult tip = run_git(repo, {"rev-parse", "--verify", ref + "^{commit}"});
  if (!tip.ok())
    throw Error(Errc::EmptyHistory,
                "no commits on '" + ref + "' in " + repo);
  return trim(tip.out);
}

struct TreeEntry {
  std::string oid;
  std::string path;
};

std::vector<TreeEntry> list_tip_files(const std::string& repo,
                                      const std::string& tip,
                                      const std::set<std::string>& extensions) {
  RunResult res = run_git(repo, {"ls-tree", "-r", "-z", tip});
  if (!res.ok())
    throw Error(Errc::UnreadableObject, "ls-tree failed for " + tip);
  std::vector<TreeEntry> entries;
  size_t pos = 0;
  while (pos < res.out.size()) {
    size_t nul = res.out.find('\0', pos);
    if (nul == std::string::npos) break;
    std::string record = res.out.substr(pos, nul - pos);
    pos = nul + 1;
    auto tab = record.find('\t');
    if (tab == std::string::npos) continue;
    std::vector<std::string> head = split(record.substr(0, tab), ' ');
    if (head.size() < 3) continue;
    const std::string& mode = head[0];
    const std::string& type = head[1];
    if (type != "blob") continue;
    if (mode != "100644" && mode != "100755") continue; // skip symlinks
    std::string path = record.substr(tab + 1);
    if (!passes_extension_filter(path, extensions)) continue;
    entries.push_back({head[2], std::move(path)});
  }
  return entries;
}

// One cat-file --batch round trip for all tip blobs.
std::map<std::string, std::string> read_blobs(
    const std::string& repo, const std::vector<TreeEntry>& entries) {
  std::map<std::string, std::string> by_oid;
  if (entries.empty()) return by_oid;
  std::string input;
  for (const auto& entry : entries) {
    input += entry.oid;
    input += '\n';
  }
  TempFile batch_input(input);
  RunResult res =
      run_git(repo, {"cat-file", "--batch"}, batch_input.path());
  if (!res.ok()) throw Error(Errc::UnreadableObject, "cat-file --batch failed");

  size_t pos = 0;
  while (pos < res.out.size()) {
    size_t eol = res.out.find('\n', pos);
    if (eol == std::string::npos) break;
    std::string header = res.out.substr(pos, eol - pos);
    pos = eol + 1;
    std::vector<std::string> fields = split(header, ' ');
    if (fields.size() >= 2 && fields[1] == "missing")
      throw Error(Errc::UnreadableObject, "missing object " + fields[0]);
    if (fields.size() < 3)
      throw Error(Errc::UnreadableObject, "unexpected cat-file header: " + header);
    size_t size = static_cast<size_t>(std::stoull(fields[2]));
    if (pos + size > res.out.size())
      throw Error(Errc::UnreadableObject, "truncated object " + fields[0]);
    by_oid[fields[0]] = res.out.substr(pos, size);
    pos += size + 1; // trailing newline after each object
  }
  return by_oid;
}

} // namespace

std::set<std::string> IngestConfig::default_extension_allowlist() {
  // The ten mainstream languages this tool targets by default.
  return {"js", "mjs", "cjs", "jsx",      // JavaScript
          "py",                            // Python
          "java",                          // Java
          "ts", "tsx",                     // TypeScript
          "cs",                            // C#
          "cpp", "cc", "cxx", "hpp", "hh", "hxx", "h", // C++ (h shared with C)
          "php",                           // PHP
          "sh", "bash",                    // Shell
          "c",                             // C
          "rb"};                           // Ruby
}

bool is_binary_blob(const std::string& blob) {
  size_t limit = std::min(blob.size(), kBinarySniffBytes);
  return blob.find('\0') < limit;
}

std::int64_t count_file_loc(const std::string& blob) {
  if (is_binary_blob(blob))
    throw Error(Errc::BinaryFile, "NUL byte in blob");
  if (blob.empty()) return 0;
  std::int64_t lines = static_cast<std::int64_t>(
      std::count(blob.begin(), blob.end(), '\n'));
  if (blob.back() != '\n') ++lines;
  return lines;
}

bool passes_extension_filter(const std::string& path,
                             const std::set<std::string>& extensions) {
  if (extensions.empty()) return true;
  auto dot = path.find_last_of('.');
  if (dot == std::string::npos || dot + 1 == path.size()) return false;
  auto slash = path.find_last_of('/');
  if (slash != std::string::npos && dot < slash) return false;
  return extensions.count(to_lower(path.substr(dot + 1))) > 0;
}

ContributionLedger ingest_repository(const std::string& repo_path,
                                     const IngestConfig& config) {
  std::string tip = resolve_tip(repo_path, config.branch);

  std::vector<std::string> log_args = {
      "log", tip, "--reverse", "--topo-order",
      "--format=%x01%H%x1f%an%x1f%ae%x1f%at",
      "--raw", "--numstat", "--diff-merges=first-parent"};
  log_args.push_back(config.follow_renames ? "--find-renames" : "--no-renames");
  RunResult log = run_git(repo_path, log_args);
  if (!log.ok())
    throw Error(Errc::UnreadableObject, "git log failed: " + trim(log.err));

  struct State {
    std::map<PairKey, PairContribution> pairs;
    std::map<std::string, std::string> creator; // path -> canonical id
    std::set<std::string> alive;
    std::map<std::string, AuthorIdentity> authors;
    std::int64_t max_ts = 0;
  } state;

  const AliasMap* aliases =
      config.alias_map ? &*config.alias_map : nullptr;

  auto touch_pair = [&state](const std::string& dev, const std::string& path,
                             std::int64_t ts) -> PairContribution& {
    PairContribution& pair = state.pairs[PairKey{dev, path}];
    pair.last_commit_ts = std::max(pair.last_commit_ts, ts);
    return pair;
  };

  auto apply_commit = [&](const RawCommit& raw) {
    AuthorIdentity identity =
        resolve_identity(raw.author_name, raw.author_email, aliases);
    const std::string& dev = identity.canonical_id;
    auto [it, inserted] = state.authors.emplace(dev, identity);
    if (!inserted)
      it->second.emails.insert(identity.emails.begin(), identity.emails.end());
    state.max_ts = std::max(state.max_ts, raw.timestamp);

    for (const FileChange& change : merge_commit_changes(raw)) {
      if (change.is_rename && config.follow_renames &&
          !change.old_path.empty()) {
        // Carry history across the rename: contributions keep their
        // original authors and the creator moves with the file.
        std::vector<std::pair<PairKey, PairContribution>> moved;
        for (auto pair_it = state.pairs.begin(); pair_it != state.pairs.end();) {
          if (pair_it->first.path == change.old_path) {
            moved.emplace_back(PairKey{pair_it->first.developer, change.path},
                               std::move(pair_it->second));
            pair_it = state.pairs.erase(pair_it);
          } else {
            ++pair_it;
          }
        }
        for (auto& [key, contribution] : moved) {
          PairContribution& target = state.pairs[key];
          target.total_adds += contribution.total_adds;
          target.is_first_author |= contribution.is_first_author;
          target.last_commit_ts =
              std::max(target.last_commit_ts, contribution.last_commit_ts);
          target.per_commit_adds.insert(target.per_commit_adds.end(),
                                        contribution.per_commit_adds.begin(),
                                        contribution.per_commit_adds.end());
        }
        if (auto creator_it = state.creator.find(change.old_path);
            creator_it != state.creator.end()) {
          state.creator[change.path] = creator_it->second;
          state.creator.erase(creator_it);
        }
        state.alive.erase(change.old_path);
        state.alive.insert(change.path);
      } else if (change.is_creation) {
        if (!state.alive.count(change.path)) {
          // Re-creation after deletion reassigns the creator.
          state.creator[change.path] = dev;
          state.alive.insert(change.path);
        }
      } else if (change.is_deletion) {
        state.alive.erase(change.path);
      }

      PairContribution& pair = touch_pair(dev, change.path, raw.timestamp);
      if (!change.is_binary && change.lines_added > 0) {
        double adds = static_cast<double>(change.lines_added);
        pair.total_adds += adds;
        pair.per_commit_adds.push_back({raw.hash, adds});
      }
    }
  };

  RawCommit current;
  bool have_commit = false;
  for (const std::string& line : split_lines(log.out)) {
    if (!line.empty() && line[0] == '\x01') {
      if (have_commit) apply_commit(current);
      current = RawCommit{};
      std::vector<std::string> fields = split(line.substr(1), '\x1f');
      if (fields.size() < 4)
        throw Error(Errc::UnreadableObject, "malformed log header");
      current.hash = fields[0];
      current.author_name = fields[1];
      current.author_email = fields[2];
      current.timestamp = std::stoll(fields[3]);
      have_commit = true;
    } else if (!line.empty() && line[0] == ':') {
      if (auto entry = parse_raw_line(line)) current.raw_entries.push_back(*entry);
    } else if (auto numstat = parse_numstat_line(line)) {
      current.numstat_entries.push_back(*numstat);
    }
  }
  if (have_commit) apply_commit(current);

  std::vector<TreeEntry> tip_files =
      list_tip_files(repo_path, tip, config.extensions);
  std::map<std::string, std::string> blobs = read_blobs(repo_path, tip_files);

  ContributionLedger ledger;
  ledger.reference_ts = state.max_ts;
  for (const auto& entry : tip_files) {
    const std::string& blob = blobs.at(entry.oid);
    if (is_binary_blob(blob)) continue;
    std::int64_t loc = count_file_loc(blob);
    if (loc == 0) continue; // expertise model needs ln(Size) > defined
    ledger.file_loc[entry.path] = loc;
  }

  for (auto& [key, contribution] : state.pairs) {
    auto loc_it = ledger.file_loc.find(key.path);
    if (loc_it == ledger.file_loc.end()) continue;
    PairContribution kept = contribution;
    auto creator_it = state.creator.find(key.path);
    kept.is_first_author = creator_it != state.creator.end() &&
                           creator_it->second == key.developer;
    ledger.pairs[key] = std::move(kept);
  }

  for (const auto& [key, contribution] : ledger.pairs) {
    (void)contribution;
    auto author_it = state.authors.find(key.developer);
    if (author_it != state.authors.end())
      ledger.authors[key.developer] = author_it->second;
  }
  return ledger;
}

std::optional<IntroducingCommit> find_introducing_commit(
    const std::string& repo_path, const std::string& needle,
    const std::string& path) {
  RunResult log = run_git(repo_path, {"log", "-S" + needle, "--format=%H",
                                      "--reverse", "--", path});
  if (!log.ok()) return std::nullopt;
  std::vector<std::string> hashes = split_lines(log.out);
  if (hashes.empty() || hashes[0].empty()) return std::nullopt;

  IntroducingCommit result;
  result.commit_id = hashes[0];
  RunResult show = run_git(
      repo_path, {"show", result.commit_id, "--format=", "--unified=0",
                  "--no-renames", "--diff-merges=first-parent", "--", path});
  if (!show.ok()) return std::nullopt;
  for (const std::string& line : split_lines(show.out)) {
    if (line.size() >= 3 && line.compare(0, 3, "+++") == 0) continue;
    if (!line.empty() && line[0] == '+') result.added_lines.push_back(line.substr(1));
  }
  return result;
}

} // namespace doekit
