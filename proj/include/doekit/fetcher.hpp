#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "doekit/conversation.hpp"

namespace doekit {

struct FetchResult {
  int status = 0; // 0 means the transport failed before any response
  std::string body;
};

class PageFetcher {
public:
  virtual ~PageFetcher() = default;
  virtual FetchResult fetch(const std::string& url) = 0;
};

// Serves recorded pages from a directory tree: one directory per share id
// holding page.html, and optionally status.txt with a bare HTTP status to
// replay revoked or failed responses. Unknown ids behave like a transport
// failure. Safe to share across threads.
class FixtureFetcher : public PageFetcher {
public:
  explicit FixtureFetcher(std::filesystem::path root);
  FetchResult fetch(const std::string& url) override;

private:
  std::filesystem::path root_;
};

// Live HTTPS fetcher with a request timeout and a minimum delay between
// requests to the same host.
class HttpFetcher : public PageFetcher {
public:
  explicit HttpFetcher(std::chrono::milliseconds timeout =
                           std::chrono::milliseconds(10000),
                       std::chrono::milliseconds per_host_delay =
                           std::chrono::milliseconds(500));
  FetchResult fetch(const std::string& url) override;

private:
  std::chrono::milliseconds timeout_;
  std::chrono::milliseconds per_host_delay_;
  std::mutex mutex_;
  std::map<std::string, std::chrono::steady_clock::time_point> last_request_;
};

// Fetches a share page and parses it. 404/403/410 mean the share was
// revoked (LinkDisabled); any other non-200, or a transport failure, is a
// NetworkError. A page that parses but contains no fenced code at all
// raises NoCodeSnippets.
Conversation fetch_conversation(const std::string& url, PageFetcher& fetcher);

using HttpGet = std::function<FetchResult(
    const std::string& url,
    const std::vector<std::pair<std::string, std::string>>& headers)>;

// Code-search query URL for one share link and language.
std::string github_search_url(const std::string& share_url,
                              const std::string& language);

// Thin search client: responses are cached on disk keyed by the query URL,
// a GITHUB_TOKEN environment variable (when present) is sent as a bearer
// token, and the HTTP transport is injected so tests never hit the
// network. Returns the parsed response body.
nlohmann::json github_code_search(const std::string& share_url,
                                  const std::string& language,
                                  const std::filesystem::path& cache_dir,
                                  const HttpGet& http);

} // namespace doekit
