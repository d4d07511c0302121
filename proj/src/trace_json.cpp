#include "sexa/trace_json.hpp"

#include <algorithm>
#include <cctype>

#include "sexa/error.hpp"

namespace sexa {

namespace {

using nlohmann::json;

bool is_integer_text(const std::string& s, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && !s.empty() && s[0] == '-') i = 1;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

ExactNumber from_fraction_text(const std::string& s) {
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_integer_text(num, true) || !is_integer_text(den, false)) {
    throw Error(ErrorKind::SyntaxError, "bad exact value '" + s + "'");
  }
  return ExactNumber(BigInt(num), BigInt(den));
}

// A rendered string must match its exact value unless it is marked as cut short.
bool rendering_agrees(const std::string& sex, const ExactNumber& exact) {
  constexpr std::string_view marker = "...";
  if (sex.size() >= marker.size() && sex.compare(sex.size() - marker.size(), marker.size(), marker) == 0) {
    const std::string digits = sex.substr(0, sex.size() - marker.size());
    const ExactNumber shown = parse(digits);
    const auto radix = digits.find(';');
    const auto places = radix == std::string::npos
                            ? 0
                            : 1 + std::count(digits.begin() + static_cast<std::ptrdiff_t>(radix), digits.end(), ',');
    ExactNumber ulp = 1;
    for (std::ptrdiff_t i = 0; i < places; ++i) ulp /= 60;
    // Cut-short digits (truncated or rounded) stay within one last place.
    return (shown - exact).abs() < ulp;
  }
  return parse(sex) == exact;
}

}  // namespace

nlohmann::ordered_json to_json(const ProblemResult& result, int places, const NotationConfig& cfg) {
  nlohmann::ordered_json doc;
  doc["problem_id"] = std::string(to_string(result.trace.problem_id));
  doc["values"] = nlohmann::ordered_json::object();
  for (const auto& [name, v] : result.values) {
    doc["values"][name] = {{"num", v.signed_numerator().str()},
                           {"den", v.denominator().str()},
                           {"sex", show(v, places, cfg)}};
  }
  doc["steps"] = nlohmann::ordered_json::array();
  for (const Step& s : result.trace.steps) {
    nlohmann::ordered_json step;
    step["index"] = s.index;
    step["label"] = s.label;
    step["operands"] = nlohmann::ordered_json::array();
    step["operands_exact"] = nlohmann::ordered_json::array();
    for (const ExactNumber& x : s.operands) {
      step["operands"].push_back(show(x, places, cfg));
      step["operands_exact"].push_back(x.to_fraction_string());
    }
    step["result"] = show(s.result, places, cfg);
    step["op"] = std::string(to_string(s.op));
    step["result_exact"] = s.result.to_fraction_string();
    doc["steps"].push_back(std::move(step));
  }
  if (!result.rendered.empty()) {
    doc["rendered"] = nlohmann::ordered_json::object();
    for (const auto& [name, digits] : result.rendered) {
      doc["rendered"][name] = to_string(digits, cfg) + (digits.exact ? "" : "...");
    }
  }
  return doc;
}

std::vector<std::string> validate_trace_json(const json& doc) {
  std::vector<std::string> problems;
  if (!doc.is_object()) return {"document is not an object"};

  if (!doc.contains("problem_id") || !doc["problem_id"].is_string()) {
    problems.emplace_back("problem_id must be a string");
  } else if (!problem_id_from_string(doc["problem_id"].get<std::string>())) {
    problems.push_back("unknown problem_id '" + doc["problem_id"].get<std::string>() + "'");
  }

  if (!doc.contains("values") || !doc["values"].is_object()) {
    problems.emplace_back("values must be an object");
  } else {
    for (const auto& [name, v] : doc["values"].items()) {
      if (!v.is_object()) {
        problems.push_back("values." + name + " must be an object");
        continue;
      }
      for (const char* field : {"num", "den", "sex"}) {
        if (!v.contains(field) || !v[field].is_string()) {
          problems.push_back("values." + name + "." + field + " must be a string");
        }
      }
      if (v.contains("num") && v["num"].is_string() && !is_integer_text(v["num"].get<std::string>(), true)) {
        problems.push_back("values." + name + ".num is not an integer");
      }
      if (v.contains("den") && v["den"].is_string() &&
          (!is_integer_text(v["den"].get<std::string>(), false) || v["den"].get<std::string>() == "0")) {
        problems.push_back("values." + name + ".den is not a positive integer");
      }
    }
  }

  if (doc.contains("rendered")) {
    if (!doc["rendered"].is_object() ||
        !std::all_of(doc["rendered"].begin(), doc["rendered"].end(), [](const json& r) { return r.is_string(); })) {
      problems.emplace_back("rendered must map names to strings");
    }
  }

  if (!doc.contains("steps") || !doc["steps"].is_array()) {
    problems.emplace_back("steps must be an array");
    return problems;
  }
  for (std::size_t i = 0; i < doc["steps"].size(); ++i) {
    const json& s = doc["steps"][i];
    const std::string where = "steps[" + std::to_string(i) + "]";
    if (!s.is_object()) {
      problems.push_back(where + " must be an object");
      continue;
    }
    if (!s.contains("index") || !s["index"].is_number_integer()) problems.push_back(where + ".index must be an integer");
    if (!s.contains("label") || !s["label"].is_string()) problems.push_back(where + ".label must be a string");
    if (!s.contains("result") || !s["result"].is_string()) problems.push_back(where + ".result must be a string");
    if (!s.contains("operands") || !s["operands"].is_array() ||
        !std::all_of(s["operands"].begin(), s["operands"].end(), [](const json& o) { return o.is_string(); })) {
      problems.push_back(where + ".operands must be an array of strings");
    }
    if (!s.contains("op") || !s["op"].is_string() || !step_op_from_string(s["op"].get<std::string>())) {
      problems.push_back(where + ".op must name a step operation");
    }
    if (!s.contains("result_exact") || !s["result_exact"].is_string()) {
      problems.push_back(where + ".result_exact must be a string");
    }
    if (!s.contains("operands_exact") || !s["operands_exact"].is_array() ||
        (s.contains("operands") && s["operands"].is_array() &&
         s["operands_exact"].size() != s["operands"].size())) {
      problems.push_back(where + ".operands_exact must parallel operands");
    }
  }
  return problems;
}

std::vector<TraceIssue> verify_trace_json(const json& doc) {
  std::vector<TraceIssue> issues;
  for (const std::string& p : validate_trace_json(doc)) issues.push_back({0, p});
  if (!issues.empty()) return issues;

  ProblemResult result;
  result.trace.problem_id = *problem_id_from_string(doc["problem_id"].get<std::string>());
  try {
    for (const auto& [name, v] : doc["values"].items()) {
      ExactNumber x(BigInt(v["num"].get<std::string>()), BigInt(v["den"].get<std::string>()));
      if (!rendering_agrees(v["sex"].get<std::string>(), x)) {
        issues.push_back({0, "values." + name + ".sex does not match num/den"});
      }
      result.values.emplace_back(name, std::move(x));
    }
    for (const json& s : doc["steps"]) {
      Step step;
      step.index = s["index"].get<int>();
      step.label = s["label"].get<std::string>();
      step.op = *step_op_from_string(s["op"].get<std::string>());
      for (std::size_t i = 0; i < s["operands_exact"].size(); ++i) {
        step.operands.push_back(from_fraction_text(s["operands_exact"][i].get<std::string>()));
        if (!rendering_agrees(s["operands"][i].get<std::string>(), step.operands.back())) {
          issues.push_back({step.index, "operand " + std::to_string(i) + " rendering disagrees"});
        }
      }
      step.result = from_fraction_text(s["result_exact"].get<std::string>());
      if (!rendering_agrees(s["result"].get<std::string>(), step.result)) {
        issues.push_back({step.index, "result rendering disagrees"});
      }
      result.trace.steps.push_back(std::move(step));
    }
    if (doc.contains("rendered")) {
      for (const auto& [name, r] : doc["rendered"].items()) {
        const auto it = std::find_if(result.values.begin(), result.values.end(),
                                     [&](const auto& v) { return v.first == name; });
        if (it == result.values.end()) {
          issues.push_back({0, "rendered." + name + " names no value"});
        } else if (!rendering_agrees(r.get<std::string>(), it->second)) {
          issues.push_back({0, "rendered." + name + " does not match its value"});
        }
      }
    }
  } catch (const Error& e) {
    issues.push_back({0, e.what()});
    return issues;
  }
  auto more = verify_result(result);
  issues.insert(issues.end(), more.begin(), more.end());
  return issues;
}

}  // namespace sexa
