#include "sexa/notation.hpp"

#include <algorithm>
#include <cctype>

#include "sexa/error.hpp"

namespace sexa {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

BigInt pow60(int k) {
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r *= 60;
  return r;
}

ExactNumber parse_decimal(std::string_view text, std::size_t start, bool negative) {
  BigInt num = 0;
  BigInt den = 1;
  std::size_t pos = start;
  std::size_t int_len = 0;
  while (pos < text.size() && is_digit(text[pos])) {
    num = num * 10 + (text[pos] - '0');
    ++pos;
    ++int_len;
  }
  if (int_len == 0) {
    throw Error(ErrorKind::SyntaxError, "expected a digit", pos);
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::size_t frac_len = 0;
    while (pos < text.size() && is_digit(text[pos])) {
      num = num * 10 + (text[pos] - '0');
      den *= 10;
      ++pos;
      ++frac_len;
    }
    if (frac_len == 0) {
      throw Error(ErrorKind::SyntaxError, "expected a digit after '.'", pos);
    }
  }
  if (pos != text.size()) {
    throw Error(ErrorKind::SyntaxError, "unexpected character", pos);
  }
  return ExactNumber(negative ? BigInt(-num) : num, den);
}

}  // namespace

void NotationConfig::validate() const {
  if (digit_separator == radix_mark) {
    throw Error(ErrorKind::InvalidParams, "digit separator and radix mark must differ");
  }
  for (char c : {digit_separator, radix_mark}) {
    if (is_digit(c) || c == '-') {
      throw Error(ErrorKind::InvalidParams, std::string("unusable notation character '") + c + "'");
    }
  }
}

ExactNumber SexDigits::value() const {
  BigInt whole = 0;
  for (int d : int_digits) whole = whole * 60 + d;
  BigInt frac = 0;
  for (int d : frac_digits) frac = frac * 60 + d;
  const BigInt scale = pow60(static_cast<int>(frac_digits.size()));
  ExactNumber v(whole * scale + frac, scale);
  return sign < 0 ? -v : v;
}

ExactNumber parse(std::string_view text, const NotationConfig& cfg) {
  cfg.validate();
  if (text.empty()) {
    throw Error(ErrorKind::SyntaxError, "empty number", 0);
  }
  std::size_t pos = 0;
  const bool negative = text[0] == '-';
  if (negative) ++pos;

  const auto body = text.substr(pos);
  const bool has_marks = body.find(cfg.digit_separator) != std::string_view::npos ||
                         body.find(cfg.radix_mark) != std::string_view::npos;
  if (!has_marks && cfg.allow_decimal_input) {
    return parse_decimal(text, pos, negative);
  }

  BigInt whole = 0;
  BigInt frac = 0;
  int frac_places = 0;
  bool in_fraction = false;
  for (;;) {
    const std::size_t group_start = pos;
    int value = 0;
    std::size_t len = 0;
    while (pos < text.size() && is_digit(text[pos])) {
      if (len < 3) value = value * 10 + (text[pos] - '0');
      ++pos;
      ++len;
    }
    if (len == 0) {
      throw Error(ErrorKind::SyntaxError, "empty digit group", group_start);
    }
    if (len > 2 || value >= 60) {
      throw Error(ErrorKind::MalformedDigit,
                  "digit '" + std::string(text.substr(group_start, len)) + "' is not in 0..59",
                  group_start);
    }
    if (in_fraction) {
      frac = frac * 60 + value;
      ++frac_places;
    } else {
      whole = whole * 60 + value;
    }

    if (pos == text.size()) break;
    const char c = text[pos];
    if (c == cfg.digit_separator) {
      ++pos;
    } else if (c == cfg.radix_mark && !in_fraction) {
      in_fraction = true;
      ++pos;
    } else {
      throw Error(ErrorKind::SyntaxError, std::string("unexpected character '") + c + "'", pos);
    }
    if (pos == text.size()) {
      throw Error(ErrorKind::SyntaxError, "dangling separator", pos - 1);
    }
  }

  const BigInt scale = pow60(frac_places);
  BigInt num = whole * scale + frac;
  if (negative) num = -num;
  return ExactNumber(num, scale);
}

SexDigits format(const ExactNumber& x, int max_frac_places, const NotationConfig& cfg) {
  if (max_frac_places < 0) {
    throw Error(ErrorKind::DomainError, "negative number of fractional places");
  }
  const BigInt scale = pow60(max_frac_places);
  const BigInt scaled = x.numerator() * scale;
  BigInt q = scaled / x.denominator();
  const BigInt r = scaled % x.denominator();
  if (cfg.rounding == RoundingMode::nearest && 2 * r >= x.denominator()) {
    ++q;
  }

  SexDigits out;
  out.sign = x.sign();
  out.exact = r.is_zero();

  BigInt whole = q / scale;
  BigInt frac = q % scale;
  out.frac_digits.assign(static_cast<std::size_t>(max_frac_places), 0);
  for (int i = max_frac_places - 1; i >= 0; --i) {
    out.frac_digits[static_cast<std::size_t>(i)] = static_cast<int>(frac % 60);
    frac /= 60;
  }
  if (out.exact) {
    while (!out.frac_digits.empty() && out.frac_digits.back() == 0) out.frac_digits.pop_back();
  }

  out.int_digits.clear();
  do {
    out.int_digits.push_back(static_cast<int>(whole % 60));
    whole /= 60;
  } while (!whole.is_zero());
  std::reverse(out.int_digits.begin(), out.int_digits.end());
  return out;
}

std::string to_string(const SexDigits& digits, const NotationConfig& cfg) {
  std::string s;
  if (digits.sign < 0) s += '-';
  for (std::size_t i = 0; i < digits.int_digits.size(); ++i) {
    if (i > 0) s += cfg.digit_separator;
    s += std::to_string(digits.int_digits[i]);
  }
  for (std::size_t i = 0; i < digits.frac_digits.size(); ++i) {
    s += i == 0 ? cfg.radix_mark : cfg.digit_separator;
    s += std::to_string(digits.frac_digits[i]);
  }
  return s;
}

std::string show(const ExactNumber& x, int places, const NotationConfig& cfg) {
  const SexDigits d = format(x, places, cfg);
  std::string s = to_string(d, cfg);
  if (!d.exact) s += "...";
  return s;
}

SexDigits reciprocal_digits(const ExactNumber& x, int places) {
  if (places < 1) {
    throw Error(ErrorKind::DomainError, "reciprocal expansion needs at least one place");
  }
  return format(reciprocal_exact(x), places);
}

}  // namespace sexa
