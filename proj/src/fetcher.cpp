#include "doekit/fetcher.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <nlohmann/json.hpp>

#include "doekit/errors.hpp"
#include "doekit/link_scan.hpp"
#include "doekit/rng.hpp"
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

// Splits "https://host/path" into host and path.
bool split_url(const std::string& url, std::string& scheme_host,
               std::string& path) {
  auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) return false;
  auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) {
    scheme_host = url;
    path = "/";
  } else {
    scheme_host = url.substr(0, path_start);
    path = url.substr(path_start);
  }
  return true;
}

} // namespace

FixtureFetcher::FixtureFetcher(std::filesystem::path root)
    : root_(std::move(root)) {}

FetchResult FixtureFetcher::fetch(const std::string& url) {
  std::filesystem::path dir = root_ / share_link_id(url);
  if (!std::filesystem::is_directory(dir)) return FetchResult{0, ""};

  FetchResult result;
  result.status = 200;
  std::filesystem::path status_file = dir / "status.txt";
  if (std::filesystem::exists(status_file))
    result.status = std::stoi(trim(read_file(status_file)));
  std::filesystem::path page = dir / "page.html";
  if (std::filesystem::exists(page)) result.body = read_file(page);
  return result;
}

HttpFetcher::HttpFetcher(std::chrono::milliseconds timeout,
                         std::chrono::milliseconds per_host_delay)
    : timeout_(timeout), per_host_delay_(per_host_delay) {}

FetchResult HttpFetcher::fetch(const std::string& url) {
  std::string scheme_host;
  std::string path;
  if (!split_url(url, scheme_host, path)) return FetchResult{0, ""};

  {
    std::unique_lock lock(mutex_);
    auto now = std::chrono::steady_clock::now();
    auto it = last_request_.find(scheme_host);
    if (it != last_request_.end()) {
      auto earliest = it->second + per_host_delay_;
      if (earliest > now) {
        lock.unlock();
        std::this_thread::sleep_for(earliest - now);
        lock.lock();
      }
    }
    last_request_[scheme_host] = std::chrono::steady_clock::now();
  }

  httplib::Client client(scheme_host);
  client.set_connection_timeout(std::chrono::duration_cast<std::chrono::seconds>(timeout_));
  client.set_read_timeout(std::chrono::duration_cast<std::chrono::seconds>(timeout_));
  client.set_follow_location(true);
  auto response = client.Get(path);
  if (!response) return FetchResult{0, ""};
  return FetchResult{response->status, response->body};
}

Conversation fetch_conversation(const std::string& url, PageFetcher& fetcher) {
  FetchResult result = fetcher.fetch(url);
  if (result.status == 404 || result.status == 403 || result.status == 410)
    throw Error(Errc::LinkDisabled, url);
  if (result.status == 0)
    throw Error(Errc::NetworkError, "no response for " + url);
  if (result.status != 200)
    throw Error(Errc::NetworkError,
                "HTTP " + std::to_string(result.status) + " for " + url);

  Conversation conversation = parse_share_page(result.body);
  if (count_code_blocks(conversation) == 0)
    throw Error(Errc::NoCodeSnippets, url);
  return conversation;
}

std::string github_search_url(const std::string& share_url,
                              const std::string& language) {
  return "https://api.github.com/search/code?q=" + share_url +
         "+language:" + language;
}

nlohmann::json github_code_search(const std::string& share_url,
                                  const std::string& language,
                                  const std::filesystem::path& cache_dir,
                                  const HttpGet& http) {
  std::string url = github_search_url(share_url, language);

  char key[17];
  std::snprintf(key, sizeof(key), "%016llx",
                static_cast<unsigned long long>(fnv1a64(url)));
  std::filesystem::path cache_file = cache_dir / (std::string(key) + ".json");
  if (std::filesystem::exists(cache_file)) {
    nlohmann::json cached =
        nlohmann::json::parse(read_file(cache_file), nullptr, false);
    if (!cached.is_discarded()) return cached;
  }

  std::vector<std::pair<std::string, std::string>> headers = {
      {"Accept", "application/vnd.github+json"},
      {"User-Agent", "doekit"},
  };
  if (const char* token = std::getenv("GITHUB_TOKEN"); token && *token)
    headers.emplace_back("Authorization", std::string("Bearer ") + token);

  FetchResult result = http(url, headers);
  if (result.status != 200)
    throw Error(Errc::NetworkError,
                "code search returned " + std::to_string(result.status));
  nlohmann::json body = nlohmann::json::parse(result.body, nullptr, false);
  if (body.is_discarded())
    throw Error(Errc::ParseError, "code search response is not JSON");

  std::filesystem::create_directories(cache_dir);
  std::ofstream out(cache_file, std::ios::binary);
  out << body.dump(2) << "\n";
  return body;
}

} // namespace doekit
