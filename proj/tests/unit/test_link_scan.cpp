#include <doctest.h>

#include <doekit/link_scan.hpp>
#include <doekit/mine.hpp>

#include <string>

using namespace doekit;

namespace {

const std::string kId36 = "abcdefgh-ABCD-4000-8000-123456789012"; // 36 chars
const std::string kOpenAi = "https://chat.openai.com/share/" + kId36;
const std::string kChatGpt = "https://chatgpt.com/share/" + kId36;

} // namespace

TEST_CASE("validate accepts exactly 36 id characters on either host") {
  CHECK(validate_share_url(kOpenAi));
  CHECK(validate_share_url(kChatGpt));
  CHECK_FALSE(validate_share_url(kOpenAi.substr(0, kOpenAi.size() - 1)));
  CHECK_FALSE(validate_share_url(kOpenAi + "f"));
  CHECK_FALSE(validate_share_url(kOpenAi + "/"));
  CHECK_FALSE(validate_share_url("http://chat.openai.com/share/" + kId36));
  CHECK_FALSE(validate_share_url("https://example.com/share/" + kId36));
  CHECK_FALSE(validate_share_url(" " + kOpenAi));
  CHECK_FALSE(validate_share_url("https://chat.openai.com/share/" +
                                 std::string(36, '_')));
}

TEST_CASE("validate inherits the pattern's unescaped dots") {
  // the dots in the host patterns are wildcards, on purpose: the constants
  // are kept byte-for-byte stable rather than re-escaped
  CHECK(validate_share_url("https://chatXopenaiYcom/share/" + kId36));
}

TEST_CASE("extraction requires the literal host prefix") {
  CHECK(extract_share_urls("https://chatXopenaiYcom/share/" + kId36).empty());
  auto found = extract_share_urls("see " + kOpenAi + " there");
  REQUIRE(found.size() == 1);
  CHECK(found[0] == kOpenAi);
}

TEST_CASE("extraction enforces the 36-character boundary") {
  CHECK(extract_share_urls(kOpenAi + "f").empty());   // 37 id chars
  CHECK(extract_share_urls("x " + kOpenAi.substr(0, kOpenAi.size() - 1) + " y")
            .empty());                                 // 35 id chars
  CHECK(extract_share_urls(kOpenAi).size() == 1);      // end of text
  CHECK(extract_share_urls(kOpenAi + ".").size() == 1);
  CHECK(extract_share_urls("(" + kChatGpt + ")").size() == 1);
  CHECK(extract_share_urls(kOpenAi + "\n").size() == 1);
}

TEST_CASE("extraction finds every occurrence in order") {
  std::string other = "https://chatgpt.com/share/zzzzzzzz-zzzz-4zzz-8zzz-zzzzzzzzzzzz";
  auto found = extract_share_urls("a " + kOpenAi + " b " + other + " c " + kOpenAi);
  REQUIRE(found.size() == 3);
  CHECK(found[0] == kOpenAi);
  CHECK(found[1] == other);
  CHECK(found[2] == kOpenAi);
}

TEST_CASE("share ids may not contain other url characters") {
  CHECK_FALSE(is_share_id_char('/'));
  CHECK_FALSE(is_share_id_char('.'));
  CHECK_FALSE(is_share_id_char('_'));
  CHECK(is_share_id_char('a'));
  CHECK(is_share_id_char('Z'));
  CHECK(is_share_id_char('0'));
  CHECK(is_share_id_char('-'));
}

TEST_CASE("share_link_id returns the last path segment") {
  CHECK(share_link_id(kOpenAi) == kId36);
  CHECK(share_link_id(kChatGpt) == kId36);
}

TEST_CASE("scan_for_links walks files in path order") {
  std::map<std::string, std::string> corpus{
      {"b.py", "# " + kOpenAi + "\n"},
      {"a.py", "# none here\n"},
      {"c.js", "// " + kChatGpt + " and " + kOpenAi + "\n"}};
  auto records = scan_for_links(corpus);
  REQUIRE(records.size() == 3);
  CHECK(records[0].file_path == "b.py");
  CHECK(records[0].url == kOpenAi);
  CHECK(records[1].file_path == "c.js");
  CHECK(records[1].url == kChatGpt);
  CHECK(records[2].file_path == "c.js");
  CHECK(records[2].url == kOpenAi);
}

TEST_CASE("the recorded scan corpus yields exactly three links") {
  auto corpus = read_corpus(std::string(DOEKIT_FIXTURES_DIR) + "/scan_corpus");
  auto records = scan_for_links(corpus);
  REQUIRE(records.size() == 3);
  CHECK(records[0].file_path == "alpha.py");
  CHECK(records[0].url ==
        "https://chat.openai.com/share/bbbbbbbb-bbbb-4bbb-8bbb-bbbbbbbbbbbb");
  CHECK(records[1].file_path == "beta.js");
  CHECK(records[1].url ==
        "https://chatgpt.com/share/cccccccc-cccc-4ccc-8ccc-cccccccccccc");
  CHECK(records[2].file_path == "gamma.java");
  CHECK(records[2].url ==
        "https://chat.openai.com/share/dddddddd-dddd-4ddd-8ddd-dddddddddddd");
}
