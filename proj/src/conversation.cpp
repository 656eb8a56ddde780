#include "doekit/conversation.hpp"

#include <nlohmann/json.hpp>

#include "doekit/errors.hpp"
#include "doekit/strutil.hpp"

namespace doekit {

namespace {

constexpr std::string_view kScriptOpen =
    "<script id=\"__NEXT_DATA__\" type=\"application/json\">";
constexpr std::string_view kScriptClose = "</script>";

std::string message_text(const nlohmann::json& message) {
  if (!message.contains("content")) return {};
  const auto& content = message["content"];
  if (content.value("content_type", "") != "text") return {};
  if (!content.contains("parts") || !content["parts"].is_array()) return {};
  std::string text;
  for (const auto& part : content["parts"]) {
    if (!part.is_string()) continue;
    if (!text.empty()) text += "\n";
    text += part.get<std::string>();
  }
  return text;
}

void append_paragraph(std::string& target, const std::string& piece) {
  if (piece.empty()) return;
  if (!target.empty()) target += "\n\n";
  target += piece;
}

} // namespace

std::vector<CodeBlock> extract_code_blocks(std::string_view markdown) {
  std::vector<CodeBlock> blocks;
  bool in_block = false;
  CodeBlock current;
  std::string body;
  for (const std::string& line : split_lines(markdown)) {
    std::string_view trimmed = trim_view(line);
    if (!in_block) {
      if (starts_with(trimmed, "```")) {
        in_block = true;
        current = CodeBlock{};
        std::string tag(trim_view(trimmed.substr(3)));
        if (!tag.empty()) current.language_tag = tag;
        body.clear();
      }
      continue;
    }
    if (trimmed == "```") {
      in_block = false;
      current.body = body;
      blocks.push_back(std::move(current));
      continue;
    }
    if (!body.empty()) body += "\n";
    body += line;
  }
  if (in_block) {
    current.body = body;
    blocks.push_back(std::move(current));
  }
  return blocks;
}

Conversation parse_share_page(const std::string& html) {
  std::size_t open = html.find(kScriptOpen);
  if (open == std::string::npos)
    throw Error(Errc::ParseError, "no __NEXT_DATA__ payload in page");
  std::size_t start = open + kScriptOpen.size();
  std::size_t close = html.find(kScriptClose, start);
  if (close == std::string::npos)
    throw Error(Errc::ParseError, "unterminated __NEXT_DATA__ payload");

  nlohmann::json payload =
      nlohmann::json::parse(html.substr(start, close - start), nullptr, false);
  if (payload.is_discarded())
    throw Error(Errc::ParseError, "__NEXT_DATA__ is not valid JSON");

  const nlohmann::json* cursor = &payload;
  for (const char* step : {"props", "pageProps", "serverResponse", "data"}) {
    if (!cursor->contains(step))
      throw Error(Errc::ParseError,
                  std::string("share payload missing ") + step);
    cursor = &(*cursor)[step];
  }
  if (!cursor->contains("linear_conversation") ||
      !(*cursor)["linear_conversation"].is_array())
    throw Error(Errc::ParseError, "share payload has no linear_conversation");

  Conversation conversation;
  std::string prompt;
  std::string response;
  bool have_prompt = false;

  auto flush = [&]() {
    if (!have_prompt || response.empty()) return;
    Turn turn;
    turn.prompt = prompt;
    turn.response = response;
    turn.code_blocks = extract_code_blocks(response);
    conversation.turns.push_back(std::move(turn));
    prompt.clear();
    response.clear();
    have_prompt = false;
  };

  for (const auto& node : (*cursor)["linear_conversation"]) {
    if (!node.contains("message")) continue;
    const auto& message = node["message"];
    std::string role;
    if (message.contains("author"))
      role = message["author"].value("role", "");
    std::string text = message_text(message);
    if (text.empty()) continue;
    if (role == "user") {
      if (!response.empty()) flush();
      append_paragraph(prompt, text);
      have_prompt = true;
    } else if (role == "assistant") {
      if (have_prompt) append_paragraph(response, text);
    }
  }
  flush();

  if (conversation.turns.empty())
    throw Error(Errc::ParseError, "no complete prompt/response turn in page");
  return conversation;
}

Conversation conversation_from_json(const nlohmann::json& json) {
  Conversation conversation;
  if (!json.contains("turns") || !json["turns"].is_array())
    throw Error(Errc::ParseError, "conversation JSON has no turns array");
  for (const auto& turn_json : json["turns"]) {
    Turn turn;
    turn.prompt = turn_json.value("prompt", "");
    turn.response = turn_json.value("response", "");
    if (turn_json.contains("code_blocks")) {
      for (const auto& block_json : turn_json["code_blocks"]) {
        CodeBlock block;
        if (block_json.contains("language_tag") &&
            block_json["language_tag"].is_string())
          block.language_tag = block_json["language_tag"].get<std::string>();
        block.body = block_json.value("body", "");
        turn.code_blocks.push_back(std::move(block));
      }
    }
    conversation.turns.push_back(std::move(turn));
  }
  return conversation;
}

nlohmann::json conversation_to_json(const Conversation& conversation) {
  nlohmann::json turns = nlohmann::json::array();
  for (const Turn& turn : conversation.turns) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const CodeBlock& block : turn.code_blocks) {
      nlohmann::json block_json;
      if (block.language_tag)
        block_json["language_tag"] = *block.language_tag;
      else
        block_json["language_tag"] = nullptr;
      block_json["body"] = block.body;
      blocks.push_back(std::move(block_json));
    }
    turns.push_back({{"prompt", turn.prompt},
                     {"response", turn.response},
                     {"code_blocks", std::move(blocks)}});
  }
  return {{"turns", std::move(turns)}};
}

std::size_t count_turns(const Conversation& conversation) {
  return conversation.turns.size();
}

std::size_t count_code_blocks(const Conversation& conversation) {
  std::size_t total = 0;
  for (const Turn& turn : conversation.turns) total += turn.code_blocks.size();
  return total;
}

std::vector<std::string> snippet_lines(const Conversation& conversation) {
  std::vector<std::string> lines;
  for (const Turn& turn : conversation.turns) {
    for (const CodeBlock& block : turn.code_blocks) {
      for (std::string& line : split_lines(block.body))
        lines.push_back(std::move(line));
    }
  }
  return lines;
}

} // namespace doekit
