// include/sexa/trace_json.hpp - JSON form of a solver result and its trace.
//
// Layout:
//   { "problem_id": "SMT19_P1",
//     "values": { "<name>": { "num": "32", "den": "1", "sex": "32" }, ... },
//     "steps": [ { "index": 1, "label": "...", "operands": ["0;45"], "result": "0;33,45",
//                  "op": "square", "operands_exact": ["3/4"], "result_exact": "9/16" }, ... ] }
//
// "sex" strings carry a trailing "..." when the expansion was cut short at the
// requested number of places. "op" and the *_exact fields make the trace
// re-executable without loss; "rendered" is present only for solvers that
// render digits themselves.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sexa/notation.hpp"
#include "sexa/trace.hpp"

namespace sexa {

nlohmann::ordered_json to_json(const ProblemResult& result, int places,
                               const NotationConfig& cfg = {});

/// Structural problems with a trace document; empty when it is well formed.
std::vector<std::string> validate_trace_json(const nlohmann::json& doc);

/// Schema check, then re-executes every step from the exact fields and
/// checks the rendered strings agree with them.
std::vector<TraceIssue> verify_trace_json(const nlohmann::json& doc);

}  // namespace sexa
