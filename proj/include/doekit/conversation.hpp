#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace doekit {

struct CodeBlock {
  std::optional<std::string> language_tag;
  std::string body;
};

// One user prompt and the assistant response that follows it.
struct Turn {
  std::string prompt;
  std::string response;
  std::vector<CodeBlock> code_blocks;
};

struct Conversation {
  std::vector<Turn> turns;
};

// Fenced blocks (```lang ... ```) in a markdown response. An unterminated
// fence runs to the end of the text. The language tag is whatever follows
// the opening backticks, or absent when that is empty.
std::vector<CodeBlock> extract_code_blocks(std::string_view markdown);

// Parses a recorded share page: pulls the __NEXT_DATA__ JSON island and
// walks props.pageProps.serverResponse.data.linear_conversation, pairing
// each user message with the assistant text that follows it. A trailing
// unanswered prompt is dropped. Throws Error(ParseError) when the page has
// no payload, the payload does not parse, or no complete turn exists.
Conversation parse_share_page(const std::string& html);

Conversation conversation_from_json(const nlohmann::json& json);
nlohmann::json conversation_to_json(const Conversation& conversation);

std::size_t count_turns(const Conversation& conversation);
std::size_t count_code_blocks(const Conversation& conversation);

// Every line of every code block, in document order.
std::vector<std::string> snippet_lines(const Conversation& conversation);

} // namespace doekit
