#include "sexa/expression.hpp"

#include <cctype>
#include <string>

#include "sexa/error.hpp"
#include "sexa/roots.hpp"

namespace sexa {

namespace {

constexpr std::string_view kTimes = "\xC3\x97";   // U+00D7
constexpr std::string_view kDivide = "\xC3\xB7";  // U+00F7
constexpr std::string_view kMinus = "\xE2\x88\x92";  // U+2212

class Parser {
public:
  Parser(std::string_view text, const ExpressionOptions& opts) : text_(text), opts_(opts) {}

  ExactNumber run() {
    ExactNumber v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected input");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::SyntaxError, what + " at offset " + std::to_string(pos_), pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool eat(std::string_view s) {
    skip_space();
    if (text_.substr(pos_, s.size()) == s) {
      pos_ += s.size();
      return true;
    }
    return false;
  }

  bool eat_minus() { return eat('-') || eat(kMinus); }

  ExactNumber expr() {
    ExactNumber v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat_minus()) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  ExactNumber term() {
    ExactNumber v = unary();
    for (;;) {
      if (eat('*') || eat(kTimes)) {
        v *= unary();
      } else if (eat('/') || eat(kDivide)) {
        const std::size_t at = pos_;
        ExactNumber d = unary();
        if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero at offset " + std::to_string(at), at);
        v /= d;
      } else {
        return v;
      }
    }
  }

  ExactNumber unary() {
    if (eat_minus()) return -unary();
    if (eat('+')) return unary();
    return primary();
  }

  ExactNumber primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    if (eat('(')) {
      ExactNumber v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) return call();
    if (is_literal_char(c)) return literal();
    fail(std::string("unexpected character '") + c + "'");
  }

  ExactNumber call() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name != "sqrt" && name != "sq") {
      pos_ = start;
      fail("unknown function '" + std::string(name) + "'");
    }
    if (!eat('(')) fail("expected '(' after " + std::string(name));
    const std::size_t arg_at = pos_;
    ExactNumber arg = expr();
    if (!eat(')')) fail("expected ')'");
    if (name == "sq") return square(arg);
    if (arg.sign() < 0) {
      throw Error(ErrorKind::NegativeInput, "square root of a negative number at offset " + std::to_string(arg_at), arg_at);
    }
    if (auto r = sqrt_exact(arg)) return *r;
    if (opts_.heron_iterations) return sqrt_heron(arg, *opts_.heron_iterations);
    throw Error(ErrorKind::NotExactlySolvable,
                arg.to_fraction_string() + " has no rational square root (offset " +
                    std::to_string(arg_at) + ")",
                arg_at);
  }

  bool is_literal_char(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == opts_.notation.digit_separator ||
           c == opts_.notation.radix_mark || c == '.';
  }

  ExactNumber literal() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_literal_char(text_[pos_])) ++pos_;
    try {
      return parse(text_.substr(start, pos_ - start), opts_.notation);
    } catch (const Error& e) {
      const std::size_t at = start + e.offset().value_or(0);
      std::string msg = e.what();
      msg = msg.substr(msg.find(": ") + 2);
      throw Error(e.kind(), msg + " at offset " + std::to_string(at), at);
    }
  }

  std::string_view text_;
  const ExpressionOptions& opts_;
  std::size_t pos_ = 0;
};

}  // namespace

ExactNumber evaluate_expression(std::string_view text, const ExpressionOptions& opts) {
  opts.notation.validate();
  return Parser(text, opts).run();
}

}  // namespace sexa
