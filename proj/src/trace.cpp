#include "sexa/trace.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "sexa/error.hpp"
#include "sexa/roots.hpp"

namespace sexa {

namespace {

constexpr std::array kStepOps{
    std::pair{StepOp::given, "given"},   std::pair{StepOp::add, "add"},
    std::pair{StepOp::sub, "sub"},       std::pair{StepOp::mul, "mul"},
    std::pair{StepOp::div, "div"},       std::pair{StepOp::square, "square"},
    std::pair{StepOp::sqrt, "sqrt"},     std::pair{StepOp::reciprocal, "reciprocal"},
    std::pair{StepOp::halve, "halve"},   std::pair{StepOp::heron, "heron"},
};

constexpr std::array kProblemIds{
    std::pair{ProblemId::SMT1, "SMT1"},
    std::pair{ProblemId::SMT3_L29, "SMT3_L29"},
    std::pair{ProblemId::SMT3_L30, "SMT3_L30"},
    std::pair{ProblemId::SMT3_L31, "SMT3_L31"},
    std::pair{ProblemId::SMT3_L32, "SMT3_L32"},
    std::pair{ProblemId::PI_BRUINS, "PI_BRUINS"},
    std::pair{ProblemId::PI_NEUGEBAUER, "PI_NEUGEBAUER"},
    std::pair{ProblemId::PI_STOREHOUSE, "PI_STOREHOUSE"},
    std::pair{ProblemId::SMT15_P1, "SMT15_P1"},
    std::pair{ProblemId::SMT15_P2, "SMT15_P2"},
    std::pair{ProblemId::SMT19_P1, "SMT19_P1"},
    std::pair{ProblemId::BM85196_FWD, "BM85196_FWD"},
    std::pair{ProblemId::BM85196_INV, "BM85196_INV"},
    std::pair{ProblemId::YBC7289, "YBC7289"},
};

void expect_arity(StepOp op, std::span<const ExactNumber> operands, std::size_t n) {
  if (operands.size() != n) {
    throw Error(ErrorKind::InvalidParams, std::string(to_string(op)) + " expects " +
                                              std::to_string(n) + " operand(s), got " +
                                              std::to_string(operands.size()));
  }
}

}  // namespace

std::string_view to_string(StepOp op) noexcept {
  for (const auto& [k, name] : kStepOps) {
    if (k == op) return name;
  }
  return "unknown";
}

std::optional<StepOp> step_op_from_string(std::string_view name) noexcept {
  for (const auto& [k, n] : kStepOps) {
    if (name == n) return k;
  }
  return std::nullopt;
}

std::string_view to_string(ProblemId id) noexcept {
  for (const auto& [k, name] : kProblemIds) {
    if (k == id) return name;
  }
  return "UNKNOWN";
}

std::optional<ProblemId> problem_id_from_string(std::string_view name) noexcept {
  for (const auto& [k, n] : kProblemIds) {
    if (name == n) return k;
  }
  return std::nullopt;
}

const ExactNumber& ProblemResult::value(std::string_view name) const {
  for (const auto& [n, v] : values) {
    if (n == name) return v;
  }
  throw std::out_of_range("no result value named '" + std::string(name) + "'");
}

ExactNumber evaluate_step(StepOp op, std::span<const ExactNumber> operands) {
  switch (op) {
    case StepOp::given:
      expect_arity(op, operands, 1);
      return operands[0];
    case StepOp::add:
      expect_arity(op, operands, 2);
      return binop(BinaryOp::add, operands[0], operands[1]);
    case StepOp::sub:
      expect_arity(op, operands, 2);
      return binop(BinaryOp::sub, operands[0], operands[1]);
    case StepOp::mul:
      expect_arity(op, operands, 2);
      return binop(BinaryOp::mul, operands[0], operands[1]);
    case StepOp::div:
      expect_arity(op, operands, 2);
      return divide(operands[0], operands[1]);
    case StepOp::square:
      expect_arity(op, operands, 1);
      return square(operands[0]);
    case StepOp::sqrt: {
      expect_arity(op, operands, 1);
      auto r = sqrt_exact(operands[0]);
      if (!r) {
        throw Error(ErrorKind::NotExactlySolvable,
                    operands[0].to_fraction_string() + " has no rational square root");
      }
      return *r;
    }
    case StepOp::reciprocal:
      expect_arity(op, operands, 1);
      return reciprocal_exact(operands[0]);
    case StepOp::halve:
      expect_arity(op, operands, 1);
      return operands[0] * ExactNumber::fraction(1, 2);
    case StepOp::heron: {
      expect_arity(op, operands, 3);
      const ExactNumber& n = operands[2];
      if (!n.is_integer() || n.sign() < 0 || n > ExactNumber(64)) {
        throw Error(ErrorKind::InvalidParams, "Heron iteration count must be an integer in 0..64");
      }
      return sqrt_heron(operands[0], operands[1], n.signed_numerator().convert_to<int>());
    }
  }
  throw Error(ErrorKind::InvalidParams, "unknown step operation");
}

std::vector<TraceIssue> verify_trace(const StepTrace& trace) {
  std::vector<TraceIssue> issues;
  int expected_index = 1;
  for (const Step& step : trace.steps) {
    if (step.index != expected_index) {
      issues.push_back({step.index, "index " + std::to_string(step.index) + " where " +
                                        std::to_string(expected_index) + " was expected"});
    }
    ++expected_index;
    try {
      const ExactNumber again = evaluate_step(step.op, step.operands);
      if (again != step.result) {
        issues.push_back({step.index, "'" + step.label + "' recorded " +
                                          step.result.to_fraction_string() + " but evaluates to " +
                                          again.to_fraction_string()});
      }
    } catch (const Error& e) {
      issues.push_back({step.index, "'" + step.label + "' fails: " + e.what()});
    }
  }
  return issues;
}

std::vector<TraceIssue> verify_result(const ProblemResult& result) {
  std::vector<TraceIssue> issues = verify_trace(result.trace);
  for (const auto& [name, v] : result.values) {
    const bool found = std::any_of(result.trace.steps.begin(), result.trace.steps.end(),
                                   [&](const Step& s) { return s.result == v; });
    if (!found) {
      issues.push_back({0, "value '" + name + "' = " + v.to_fraction_string() +
                               " is not the result of any step"});
    }
  }
  return issues;
}

}  // namespace sexa
