// include/sexa/trace.hpp - Re-executable records of solver arithmetic.

#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sexa/exact_number.hpp"
#include "sexa/notation.hpp"

namespace sexa {

/// Core operation a step applies to its operands.
///
/// `given` copies its single operand (a value the scribe puts down).
/// `heron` takes (x, seed, iterations) and is only emitted when a solver is
/// explicitly allowed to approximate an irrational root.
enum class StepOp { given, add, sub, mul, div, square, sqrt, reciprocal, halve, heron };

std::string_view to_string(StepOp op) noexcept;
std::optional<StepOp> step_op_from_string(std::string_view name) noexcept;

struct Step {
  int index = 0;
  std::string label;
  StepOp op = StepOp::given;
  std::vector<ExactNumber> operands;
  ExactNumber result;
};

enum class ProblemId {
  SMT1,
  SMT3_L29,
  SMT3_L30,
  SMT3_L31,
  SMT3_L32,
  PI_BRUINS,
  PI_NEUGEBAUER,
  PI_STOREHOUSE,
  SMT15_P1,
  SMT15_P2,
  SMT19_P1,
  BM85196_FWD,
  BM85196_INV,
  YBC7289,
};

std::string_view to_string(ProblemId id) noexcept;
std::optional<ProblemId> problem_id_from_string(std::string_view name) noexcept;

struct StepTrace {
  ProblemId problem_id = ProblemId::SMT1;
  std::vector<Step> steps;
};

struct ProblemResult {
  std::vector<std::pair<std::string, ExactNumber>> values;
  StepTrace trace;
  /// Digit views a solver renders itself (e.g. the storehouse quotient).
  std::map<std::string, SexDigits> rendered;

  /// Throws std::out_of_range for an unknown name.
  const ExactNumber& value(std::string_view name) const;
};

/// Applies op to operands. Throws Error{InvalidParams} on an arity mismatch,
/// Error{NotExactlySolvable} for an irrational `sqrt`, and whatever the
/// underlying operation throws.
ExactNumber evaluate_step(StepOp op, std::span<const ExactNumber> operands);

struct TraceIssue {
  int index = 0;  // 0 for whole-trace problems
  std::string message;

  friend bool operator==(const TraceIssue&, const TraceIssue&) = default;
};

/// Re-executes every step and checks indices run 1, 2, 3, ...
std::vector<TraceIssue> verify_trace(const StepTrace& trace);

/// verify_trace plus: every named value is some step's result.
std::vector<TraceIssue> verify_result(const ProblemResult& result);

}  // namespace sexa
