// include/sexa/expression.hpp - Infix calculator over sexagesimal literals.

#pragma once

#include <optional>
#include <string_view>

#include "sexa/exact_number.hpp"
#include "sexa/notation.hpp"

namespace sexa {

struct ExpressionOptions {
  NotationConfig notation;
  /// Heron steps for irrational sqrt(); without it such roots are an error.
  std::optional<int> heron_iterations;
};

/// Evaluates an expression such as "sqrt(2,36;15 - 1,40)".
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('-' | '+') unary | primary
///   primary := literal | '(' expr ')' | ('sqrt' | 'sq') '(' expr ')'
///
/// The Unicode signs U+00D7, U+00F7 and U+2212 are accepted for *, / and -.
/// Errors carry the character offset into `text`.
ExactNumber evaluate_expression(std::string_view text, const ExpressionOptions& opts = {});

}  // namespace sexa
