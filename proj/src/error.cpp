#include "sexa/error.hpp"

namespace sexa {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedDigit: return "MalformedDigit";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NegativeInput: return "NegativeInput";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::EmptyRange: return "EmptyRange";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::NotExactlySolvable: return "NotExactlySolvable";
    case ErrorKind::NoRealChord: return "NoRealChord";
    case ErrorKind::AmbiguousQuery: return "AmbiguousQuery";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::size_t> offset)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      offset_(offset) {}

}  // namespace sexa
