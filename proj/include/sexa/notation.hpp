// include/sexa/notation.hpp - Base-60 parsing and rendering.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sexa/exact_number.hpp"

namespace sexa {

enum class RoundingMode { truncate, nearest };

struct NotationConfig {
  char digit_separator = ',';
  char radix_mark = ';';
  bool allow_decimal_input = true;
  RoundingMode rounding = RoundingMode::truncate;

  /// Throws Error{InvalidParams} when the separator equals the radix mark
  /// or either collides with a decimal digit or '-'.
  void validate() const;
};

/// Rendered sexagesimal view of an ExactNumber.
struct SexDigits {
  int sign = 0;
  std::vector<int> int_digits{0};  // most significant first
  std::vector<int> frac_digits;
  bool exact = true;  // false when frac_digits were cut short

  /// Re-assembles the digits into a rational.
  ExactNumber value() const;

  friend bool operator==(const SexDigits&, const SexDigits&) = default;
};

/// Parses "[-] d (, d)* [; d (, d)*]" with each group 0-59, or a plain
/// decimal when cfg.allow_decimal_input. Text without any separator or
/// radix mark is read as decimal when that is allowed.
/// Throws Error{MalformedDigit} or Error{SyntaxError} carrying the offset.
ExactNumber parse(std::string_view text, const NotationConfig& cfg = {});

/// Expands x in base 60 with at most max_frac_places fractional digits.
/// Exact values are rendered with the fewest digits; inexact ones keep all
/// max_frac_places digits, truncated toward zero unless cfg asks to round.
SexDigits format(const ExactNumber& x, int max_frac_places, const NotationConfig& cfg = {});

/// Plain rendering such as "2,36;15" or "0;0,45". No inexactness marker.
std::string to_string(const SexDigits& digits, const NotationConfig& cfg = {});

/// Rendering for display: to_string(format(x, places)) with "..." appended
/// when the expansion was cut short.
std::string show(const ExactNumber& x, int places = 6, const NotationConfig& cfg = {});

/// Truncated expansion of 1/x to `places` fractional digits.
/// Throws Error{ZeroInput} for x == 0 and Error{DomainError} for places < 1.
SexDigits reciprocal_digits(const ExactNumber& x, int places);

}  // namespace sexa
