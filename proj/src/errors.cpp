#include "doekit/errors.hpp"

namespace doekit {

const char* errc_name(Errc code) {
  switch (code) {
  case Errc::NotARepository: return "NotARepository";
  case Errc::EmptyHistory: return "EmptyHistory";
  case Errc::UnreadableObject: return "UnreadableObject";
  case Errc::BinaryFile: return "BinaryFile";
  case Errc::DomainError: return "DomainError";
  case Errc::NoFiles: return "NoFiles";
  case Errc::UnknownPair: return "UnknownPair";
  case Errc::LinkDisabled: return "LinkDisabled";
  case Errc::NoCodeSnippets: return "NoCodeSnippets";
  case Errc::NetworkError: return "NetworkError";
  case Errc::ParseError: return "ParseError";
  case Errc::EmptyInput: return "EmptyInput";
  case Errc::DegenerateRanking: return "DegenerateRanking";
  case Errc::AllZeroDifferences: return "AllZeroDifferences";
  case Errc::DegenerateInput: return "DegenerateInput";
  case Errc::EmptyAfterFilter: return "EmptyAfterFilter";
  case Errc::IoError: return "IoError";
  }
  return "UnknownError";
}

} // namespace doekit
