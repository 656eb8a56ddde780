#include "doekit/link_scan.hpp"

#include <array>
#include <regex>

namespace doekit {

namespace {

constexpr std::array<std::string_view, 2> kPrefixes = {
    "https://chat.openai.com/share/",
    "https://chatgpt.com/share/",
};

constexpr std::size_t kIdLength = 36;

} // namespace

bool is_share_id_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '-';
}

bool validate_share_url(const std::string& url) {
  static const std::regex openai(kOpenAiSharePattern);
  static const std::regex chatgpt(kChatGptSharePattern);
  return std::regex_match(url, openai) || std::regex_match(url, chatgpt);
}

std::vector<std::string> extract_share_urls(std::string_view text) {
  std::vector<std::string> urls;
  std::size_t pos = 0;
  while ((pos = text.find("https://", pos)) != std::string_view::npos) {
    std::size_t advance = 1;
    for (std::string_view prefix : kPrefixes) {
      if (text.compare(pos, prefix.size(), prefix) != 0) continue;
      std::size_t id_start = pos + prefix.size();
      if (id_start + kIdLength > text.size()) break;
      bool ok = true;
      for (std::size_t i = 0; i < kIdLength; ++i) {
        if (!is_share_id_char(text[id_start + i])) {
          ok = false;
          break;
        }
      }
      std::size_t end = id_start + kIdLength;
      if (ok && end < text.size() && is_share_id_char(text[end]))
        ok = false; // longer id, not a 36-character one
      if (ok) {
        urls.emplace_back(text.substr(pos, prefix.size() + kIdLength));
        advance = prefix.size() + kIdLength;
      }
      break;
    }
    pos += advance;
  }
  return urls;
}

std::vector<SharedLinkRecord>
scan_for_links(const std::map<std::string, std::string>& file_contents) {
  std::vector<SharedLinkRecord> records;
  for (const auto& [path, text] : file_contents) {
    for (std::string& url : extract_share_urls(text)) {
      SharedLinkRecord record;
      record.url = std::move(url);
      record.file_path = path;
      records.push_back(std::move(record));
    }
  }
  return records;
}

std::string share_link_id(const std::string& url) {
  auto slash = url.find_last_of('/');
  return slash == std::string::npos ? url : url.substr(slash + 1);
}

} // namespace doekit
