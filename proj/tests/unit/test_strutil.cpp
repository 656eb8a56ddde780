#include <doctest.h>

#include <doekit/strutil.hpp>

using namespace doekit;

TEST_CASE("trim strips ascii whitespace from both ends") {
  CHECK(trim("  a b  ") == "a b");
  CHECK(trim("\t\r\n x \n") == "x");
  CHECK(trim("") == "");
  CHECK(trim("   ") == "");
  CHECK(trim("nothing") == "nothing");
  CHECK(trim_view("  y ") == "y");
}

TEST_CASE("split keeps empty fields") {
  CHECK(split("a,b,c", ',') == std::vector<std::string>{"a", "b", "c"});
  CHECK(split("a,,c", ',') == std::vector<std::string>{"a", "", "c"});
  CHECK(split(",", ',') == std::vector<std::string>{"", ""});
  CHECK(split("", ',') == std::vector<std::string>{""});
}

TEST_CASE("split_lines handles trailing newline and CRLF") {
  CHECK(split_lines("a\nb\n") == std::vector<std::string>{"a", "b"});
  CHECK(split_lines("a\nb") == std::vector<std::string>{"a", "b"});
  CHECK(split_lines("a\r\nb\r\n") == std::vector<std::string>{"a", "b"});
  CHECK(split_lines("") == std::vector<std::string>{});
  CHECK(split_lines("\n") == std::vector<std::string>{""});
  CHECK(split_lines("a\n\nb") == std::vector<std::string>{"a", "", "b"});
}

TEST_CASE("prefix and suffix checks") {
  CHECK(starts_with("https://x", "https://"));
  CHECK_FALSE(starts_with("http://x", "https://"));
  CHECK(ends_with("file.py", ".py"));
  CHECK_FALSE(ends_with("py", ".py"));
  CHECK(to_lower("MiXeD") == "mixed");
}

TEST_CASE("format_double round-trips shortest form") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(0.39) == "0.39");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
  CHECK(format_double(0.0) == "0");
}

TEST_CASE("parse_csv basic rows") {
  auto rows = parse_csv("a,b\n1,2\n");
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"a", "b"});
  CHECK(rows[1] == std::vector<std::string>{"1", "2"});
}

TEST_CASE("parse_csv quoted fields") {
  auto rows = parse_csv("x,y\n\"a,b\",\"say \"\"hi\"\"\"\n");
  REQUIRE(rows.size() == 2);
  CHECK(rows[1][0] == "a,b");
  CHECK(rows[1][1] == "say \"hi\"");
}

TEST_CASE("parse_csv CRLF and empty fields") {
  auto rows = parse_csv("a,,c\r\n,,\r\n");
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"a", "", "c"});
  CHECK(rows[1] == std::vector<std::string>{"", "", ""});
}

TEST_CASE("parse_csv quoted newline stays in field") {
  auto rows = parse_csv("h\n\"line1\nline2\"\n");
  REQUIRE(rows.size() == 2);
  CHECK(rows[1][0] == "line1\nline2");
}

TEST_CASE("csv_escape quotes only when needed") {
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_escape("two\nlines") == "\"two\nlines\"");
}
