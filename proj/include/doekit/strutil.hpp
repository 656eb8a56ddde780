#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace doekit {

std::string_view trim_view(std::string_view s);
std::string trim(std::string_view s);
std::string to_lower(std::string_view s);

// Splits on a single character; keeps empty fields.
std::vector<std::string> split(std::string_view s, char sep);

// Splits text into lines on '\n'; a trailing newline does not produce a
// final empty line. "\r\n" endings are normalized by dropping the '\r'.
std::vector<std::string> split_lines(std::string_view text);

bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);

// Shortest round-trip decimal form of a double (std::to_chars).
std::string format_double(double v);

// RFC 4180 style reader: quoted fields, doubled quotes, CRLF or LF rows.
// A trailing newline does not produce an empty final row.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

// RFC 4180 style: quotes the field if it contains a comma, quote or newline.
std::string csv_escape(std::string_view field);

} // namespace doekit
