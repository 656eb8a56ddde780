#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace doekit {

// Share-link patterns, verbatim. validate_share_url applies them anchored;
// the in-text scanner uses the literal prefixes plus the boundary rule
// below, since a URL buried in prose has no anchors to lean on.
inline constexpr const char* kOpenAiSharePattern =
    "^https://chat.openai.com/share/[a-zA-Z0-9-]{36}$";
inline constexpr const char* kChatGptSharePattern =
    "^https://chatgpt.com/share/[a-zA-Z0-9-]{36}$";

struct SharedLinkRecord {
  std::string url;
  std::string file_path;
  std::string repo_id;
  std::string introducing_commit;
};

// True for characters that may appear in a share id.
bool is_share_id_char(char c);

// Full-string match against either pattern.
bool validate_share_url(const std::string& url);

// Every occurrence of a share link inside `text`, in order. A candidate
// counts only when exactly 36 id characters follow the prefix and the next
// character is absent or outside the id alphabet, so 37-character ids do
// not yield a truncated false positive.
std::vector<std::string> extract_share_urls(std::string_view text);

// Scans every file and returns one record per occurrence, files in path
// order. repo_id and introducing_commit are left for the caller to fill.
std::vector<SharedLinkRecord>
scan_for_links(const std::map<std::string, std::string>& file_contents);

// Last path segment of a validated share URL.
std::string share_link_id(const std::string& url);

} // namespace doekit
