// include/sexa/error.hpp - Error kinds raised by the sexagesimal engine.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sexa {

enum class ErrorKind {
  MalformedDigit,
  SyntaxError,
  ZeroInput,
  DivisionByZero,
  NegativeInput,
  DomainError,
  InvalidParams,
  EmptyRange,
  NoSolution,
  NotExactlySolvable,
  NoRealChord,
  AmbiguousQuery,
};

/// Stable name of an error kind; used as the message prefix on the CLI.
std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> offset = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }

  /// Character offset into the parsed text, for notation errors.
  std::optional<std::size_t> offset() const noexcept { return offset_; }

private:
  ErrorKind kind_;
  std::optional<std::size_t> offset_;
};

}  // namespace sexa
