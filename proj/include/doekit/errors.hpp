#pragma once

#include <stdexcept>
#include <string>

namespace doekit {

// Stable error codes surfaced by the library and mapped to CLI exit codes.
enum class Errc {
  NotARepository,
  EmptyHistory,
  UnreadableObject,
  BinaryFile,
  DomainError,
  NoFiles,
  UnknownPair,
  LinkDisabled,
  NoCodeSnippets,
  NetworkError,
  ParseError,
  EmptyInput,
  DegenerateRanking,
  AllZeroDifferences,
  DegenerateInput,
  EmptyAfterFilter,
  IoError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

private:
  Errc code_;
};

} // namespace doekit
