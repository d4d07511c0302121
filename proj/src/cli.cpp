#include "sexa/cli.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sexa/error.hpp"
#include "sexa/expression.hpp"
#include "sexa/notation.hpp"
#include "sexa/roots.hpp"
#include "sexa/solvers.hpp"
#include "sexa/trace_json.hpp"
#include "sexa/triples.hpp"

namespace sexa::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct Globals {
  int places = 6;
  bool places_given = false;
  bool round = false;
  bool json = false;
};

struct Context {
  Globals globals;
  std::ostringstream out;
  std::ostringstream err;

  NotationConfig notation() const {
    NotationConfig cfg;
    cfg.rounding = globals.round ? RoundingMode::nearest : RoundingMode::truncate;
    return cfg;
  }
  std::string show(const ExactNumber& x) const { return sexa::show(x, globals.places, notation()); }
  std::string show(const ExactNumber& x, int places) const { return sexa::show(x, places, notation()); }
};

/// Command-line numbers accept any calc expression, e.g. "0;15" or "1/4".
ExactNumber number_arg(const std::string& text) { return evaluate_expression(text); }

ojson number_json(const Context& ctx, const ExactNumber& x) {
  const SexDigits d = format(x, ctx.globals.places, ctx.notation());
  return {{"num", x.signed_numerator().str()},
          {"den", x.denominator().str()},
          {"sex", ctx.show(x)},
          {"exact", d.exact}};
}

// ---------------------------------------------------------------------------
// calc / convert / reciprocal / sqrt

int cmd_calc(Context& ctx, const std::string& expression, std::optional<int> heron) {
  ExpressionOptions opts;
  opts.notation = ctx.notation();
  opts.heron_iterations = heron;
  const ExactNumber v = evaluate_expression(expression, opts);
  if (ctx.globals.json) {
    ctx.out << number_json(ctx, v).dump(2) << '\n';
  } else {
    ctx.out << ctx.show(v) << '\n';
  }
  return kOk;
}

int cmd_convert(Context& ctx, const std::string& text) {
  const ExactNumber v = number_arg(text);
  if (ctx.globals.json) {
    ctx.out << number_json(ctx, v).dump(2) << '\n';
  } else {
    ctx.out << ctx.show(v) << " = " << v.to_fraction_string() << '\n';
  }
  return kOk;
}

int cmd_reciprocal(Context& ctx, const std::string& text) {
  const ExactNumber v = number_arg(text);
  const ExactNumber inv = reciprocal_exact(v);
  const bool regular = is_regular(v);
  if (ctx.globals.json) {
    ojson j = number_json(ctx, inv);
    j["regular"] = regular;
    ctx.out << j.dump(2) << '\n';
  } else {
    ctx.out << ctx.show(inv) << '\n';
  }
  return kOk;
}

int cmd_sqrt(Context& ctx, const std::string& text, std::optional<int> heron,
             const std::string& seed_text) {
  const ExactNumber v = number_arg(text);
  bool exact = true;
  ExactNumber r;
  if (auto root = sqrt_exact(v)) {
    r = *root;
  } else if (heron) {
    const ExactNumber seed = seed_text.empty() ? heron_default_seed(v) : number_arg(seed_text);
    r = sqrt_heron(v, seed, *heron);
    exact = false;
  } else {
    throw Error(ErrorKind::NotExactlySolvable,
                ctx.show(v) + " is not the square of a rational number (use --heron N)");
  }
  if (ctx.globals.json) {
    ojson j = number_json(ctx, r);
    j["root_exact"] = exact;
    ctx.out << j.dump(2) << '\n';
  } else {
    ctx.out << ctx.show(r);
    if (!exact) ctx.out << " (Heron, " << *heron << " steps; square = " << ctx.show(square(r)) << ")";
    ctx.out << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// triples

std::string triple_text(const Triple& t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

ojson triple_json(const Triple& t) {
  return {{"a", t.a()}, {"b", t.b()}, {"c", t.c()}, {"primitive", is_primitive(t)}};
}

int cmd_triples_gen(Context& ctx, std::int64_t m, std::int64_t n, std::int64_t k) {
  const Triple t = euclid_generate({k, m, n});
  if (ctx.globals.json) {
    ctx.out << triple_json(t).dump(2) << '\n';
  } else {
    ctx.out << triple_text(t) << (is_primitive(t) ? " primitive" : " not primitive") << '\n';
  }
  return kOk;
}

int cmd_triples_check(Context& ctx, std::int64_t a, std::int64_t b, std::int64_t c) {
  const bool pyth = is_pythagorean(a, b, c);
  const bool prim = pyth && is_primitive(Triple(a, b, c));
  if (ctx.globals.json) {
    ctx.out << ojson{{"a", a}, {"b", b}, {"c", c}, {"pythagorean", pyth}, {"primitive", prim}}.dump(2)
            << '\n';
    return kOk;
  }
  ctx.out << '(' << a << ", " << b << ", " << c << "): ";
  if (!pyth) {
    ctx.out << "not pythagorean\n";
  } else {
    ctx.out << "pythagorean, " << (prim ? "primitive" : "not primitive") << '\n';
  }
  return kOk;
}

int cmd_triples_decompose(Context& ctx, std::int64_t a, std::int64_t b, std::int64_t c) {
  const EuclidParams p = decompose(Triple(a, b, c));
  if (ctx.globals.json) {
    ctx.out << ojson{{"k", p.k}, {"m", p.m}, {"n", p.n}}.dump(2) << '\n';
  } else {
    ctx.out << p << '\n';
  }
  return kOk;
}

int cmd_triples_list(Context& ctx, std::int64_t c_max) {
  const auto list = enumerate_primitives(c_max);
  if (list.empty()) {
    ctx.err << "warning: " << to_string(ErrorKind::EmptyRange) << ": no primitive triple has c <= "
            << c_max << '\n';
  }
  if (ctx.globals.json) {
    ojson arr = ojson::array();
    for (const Triple& t : list) arr.push_back(triple_json(t));
    ctx.out << arr.dump(2) << '\n';
  } else {
    for (const Triple& t : list) ctx.out << triple_text(t) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// solve

struct SolveRequest {
  std::string problem;
  std::map<std::string, std::string> params;
  std::map<std::string, CLI::Option*> given;
  std::optional<int> heron;
  bool verify = false;

  bool has(const std::string& name) const { return given.at(name)->count() > 0; }
  ExactNumber get(const std::string& name, const ExactNumber& fallback) const {
    return has(name) ? number_arg(params.at(name)) : fallback;
  }
};

std::string normalize_id(std::string id) {
  std::transform(id.begin(), id.end(), id.begin(), [](unsigned char c) {
    return c == '-' ? '_' : static_cast<char>(std::tolower(c));
  });
  return id;
}

std::vector<ProblemResult> run_solvers(const Context& ctx, const SolveRequest& req) {
  SolverOptions opts;
  opts.heron_iterations = req.heron;
  const std::string id = normalize_id(req.problem);
  const int pi_places = ctx.globals.places_given ? ctx.globals.places : defaults::storehouse_places;

  auto smt15 = [&](Smt15Problem p) {
    return solve_smt15(p, req.get("enlarged", defaults::smt15_enlarged()),
                       req.get("aux", defaults::smt15_aux()), req.get("ext", defaults::smt15_ext()), opts);
  };
  auto storehouse = [&] {
    return pi_storehouse(req.get("area", defaults::storehouse_area()),
                         req.get("inner-d", defaults::storehouse_inner_diameter()),
                         req.get("wall", defaults::storehouse_wall()), pi_places);
  };
  auto bm85196 = [&](bool inverse) {
    std::optional<ExactNumber> slip;
    std::optional<ExactNumber> foot;
    if (req.has("slip")) slip = number_arg(req.params.at("slip"));
    if (req.has("foot")) foot = number_arg(req.params.at("foot"));
    if (!slip && !foot) {
      if (inverse) {
        foot = ExactNumber::fraction(3, 10);
      } else {
        slip = defaults::bm85196_slip();
      }
    }
    return solve_bm85196(req.get("l", defaults::bm85196_length()),
                         req.get("h", defaults::bm85196_height()), slip, foot, opts);
  };

  if (id == "smt1") {
    return {solve_smt1(req.get("s", defaults::smt1_side()),
                       req.get("half-base", defaults::smt1_half_base()), opts)};
  }
  if (id == "smt3") {
    return {verify_smt3(Smt3Line::L29), verify_smt3(Smt3Line::L30), verify_smt3(Smt3Line::L31),
            verify_smt3(Smt3Line::L32)};
  }
  if (id == "smt3_l29") return {verify_smt3(Smt3Line::L29)};
  if (id == "smt3_l30") return {verify_smt3(Smt3Line::L30)};
  if (id == "smt3_l31") return {verify_smt3(Smt3Line::L31)};
  if (id == "smt3_l32") return {verify_smt3(Smt3Line::L32)};
  if (id == "pi") return {pi_bruins(), pi_neugebauer(), storehouse()};
  if (id == "pi_bruins") return {pi_bruins()};
  if (id == "pi_neugebauer") return {pi_neugebauer()};
  if (id == "pi_storehouse") return {storehouse()};
  if (id == "smt15") return {smt15(Smt15Problem::P1), smt15(Smt15Problem::P2)};
  if (id == "smt15_p1") return {smt15(Smt15Problem::P1)};
  if (id == "smt15_p2") return {smt15(Smt15Problem::P2)};
  if (id == "smt19" || id == "smt19_p1") {
    return {solve_smt19(req.get("f", defaults::smt19_fraction()),
                        req.get("d", defaults::smt19_diagonal()), opts)};
  }
  if (id == "bm85196" || id == "bm85196_fwd") return {bm85196(req.has("foot"))};
  if (id == "bm85196_inv") return {bm85196(true)};
  if (id == "ybc7289") {
    return {ybc7289_diagonal(req.get("a", defaults::ybc7289_side()),
                             req.get("sqrt2", named_constant(ConstantId::SQRT2_FINE).value))};
  }
  throw CLI::ValidationError("problem", "unknown problem id '" + req.problem + "'");
}

void print_result(Context& ctx, const ProblemResult& r) {
  ctx.out << to_string(r.trace.problem_id) << '\n';
  for (const Step& s : r.trace.steps) {
    ctx.out << "  " << s.index << ". " << s.label << " -> " << ctx.show(s.result) << '\n';
  }
  for (const auto& [name, v] : r.values) {
    ctx.out << name << " = " << ctx.show(v) << '\n';
  }
  for (const auto& [name, digits] : r.rendered) {
    ctx.out << name << " (" << digits.frac_digits.size() << " places, truncated) = "
            << to_string(digits) << (digits.exact ? "" : "...") << '\n';
  }
}

int cmd_solve(Context& ctx, const SolveRequest& req) {
  const std::vector<ProblemResult> results = run_solvers(ctx, req);

  if (ctx.globals.json) {
    ojson doc;
    if (results.size() == 1) {
      doc = to_json(results.front(), ctx.globals.places, ctx.notation());
    } else {
      doc = ojson::array();
      for (const auto& r : results) doc.push_back(to_json(r, ctx.globals.places, ctx.notation()));
    }
    ctx.out << doc.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (i > 0) ctx.out << '\n';
      print_result(ctx, results[i]);
    }
  }

  if (!req.verify) return kOk;
  int code = kOk;
  for (const auto& r : results) {
    // Round-trip through text so the check sees exactly what was emitted.
    const auto doc = nlohmann::json::parse(to_json(r, ctx.globals.places, ctx.notation()).dump());
    const auto issues = verify_trace_json(doc);
    if (issues.empty()) {
      ctx.err << "trace verified: " << to_string(r.trace.problem_id) << " (" << r.trace.steps.size()
              << " steps)\n";
    } else {
      code = kVerificationFailed;
      for (const auto& issue : issues) {
        ctx.err << "trace check failed: " << to_string(r.trace.problem_id) << " step "
                << issue.index << ": " << issue.message << '\n';
      }
    }
  }
  return code;
}

// ---------------------------------------------------------------------------
// constants

struct ConstantRow {
  std::string line;
  std::string expected;
  std::string computed;
  bool pass = false;
};

/// Compares the leading fractional digits of `computed` with the printed digits.
ConstantRow digits_row(const std::string& line, const std::string& printed, const ExactNumber& value,
                       int places) {
  const SexDigits printed_digits = format(parse(printed), 60);
  SexDigits expected = printed_digits;
  if (static_cast<int>(expected.frac_digits.size()) > places) {
    expected.frac_digits.resize(static_cast<std::size_t>(places));
  }
  const SexDigits computed = format(value, places);
  const std::size_t n = expected.frac_digits.size();
  const bool pass = computed.sign == expected.sign && computed.int_digits == expected.int_digits &&
                    computed.frac_digits.size() >= n &&
                    std::equal(expected.frac_digits.begin(), expected.frac_digits.end(),
                               computed.frac_digits.begin());
  return {line, to_string(expected), to_string(computed) + (computed.exact ? "" : "..."), pass};
}

int cmd_constants(Context& ctx) {
  const int places = ctx.globals.places_given ? ctx.globals.places : defaults::storehouse_places;
  if (places < 1) throw Error(ErrorKind::DomainError, "places must be at least 1");
  std::vector<ConstantRow> rows;

  const ProblemResult l29 = verify_smt3(Smt3Line::L29);
  rows.push_back({"L29", "0;52,30", show(l29.value("height"), 6),
                  l29.value("height") == ExactNumber::fraction(7, 8)});

  const ProblemResult l30 = verify_smt3(Smt3Line::L30);
  rows.push_back({"L30", "0;57,36", show(l30.value("constant"), 6),
                  l30.value("constant") == ExactNumber::fraction(24, 25) &&
                      l30.value("identity_sum") == ExactNumber(1)});

  const ProblemResult l31 = verify_smt3(Smt3Line::L31);
  rows.push_back({"L31", "1;25", show(l31.value("sqrt2"), 6),
                  l31.value("sqrt2") == ExactNumber::fraction(17, 12) &&
                      l31.value("squared_error") == ExactNumber::fraction(1, 144)});

  const ProblemResult l32 = verify_smt3(Smt3Line::L32);
  rows.push_back({"L32", "1, 0;45", show(l32.value("length"), 6) + ", " + show(l32.value("width"), 6),
                  l32.value("length") == ExactNumber(1) &&
                      l32.value("width") == ExactNumber::fraction(3, 4)});

  const PiInterpretations pi = pi_interpretations(defaults::storehouse_area(),
                                                  defaults::storehouse_inner_diameter(),
                                                  defaults::storehouse_wall(), places);
  rows.push_back({"PI_BRUINS", "3;7,30", show(pi.bruins.value("pi"), 6),
                  pi.bruins.value("pi") == ExactNumber::fraction(25, 8)});
  rows.push_back({"PI_NEUGEBAUER", "3;7,30", show(pi.neugebauer.value("pi"), 6),
                  pi.neugebauer.value("pi") == ExactNumber::fraction(25, 8)});
  rows.push_back(digits_row("STOREHOUSE_RECIPROCAL", "0;6,32,41,39",
                            pi.storehouse.value("reciprocal"), places));
  rows.push_back(digits_row("STOREHOUSE", "3;7,37,14", pi.storehouse.value("pi"), places));

  const bool all_pass = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.pass; });
  if (ctx.globals.json) {
    ojson arr = ojson::array();
    for (const auto& r : rows) {
      arr.push_back({{"line", r.line}, {"expected", r.expected}, {"computed", r.computed}, {"pass", r.pass}});
    }
    ctx.out << arr.dump(2) << '\n';
  } else {
    for (const auto& r : rows) {
      ctx.out << r.line << std::string(r.line.size() < 22 ? 22 - r.line.size() : 1, ' ') << "expected "
              << r.expected << "  computed " << r.computed << "  " << (r.pass ? "PASS" : "FAIL") << '\n';
    }
  }
  return all_pass ? kOk : kVerificationFailed;
}

bool is_usage_error(ErrorKind k) {
  return k == ErrorKind::SyntaxError || k == ErrorKind::MalformedDigit;
}

}  // namespace

RunResult run(const std::vector<std::string>& argv) {
  Context ctx;
  CLI::App app{"Exact sexagesimal arithmetic, Pythagorean triples and tablet problem replay",
               argv.empty() ? "sexa" : argv.front()};
  app.require_subcommand(1);
  app.fallthrough();

  auto* places_opt = app.add_option("--places", ctx.globals.places, "Fractional base-60 places to display")
                         ->check(CLI::Range(0, 1000));
  app.add_flag("--round", ctx.globals.round, "Round the last displayed place instead of truncating");
  app.add_flag("--json", ctx.globals.json, "Machine-readable output");

  std::function<int()> action;

  std::string expression;
  std::optional<int> heron;
  auto* calc = app.add_subcommand("calc", "Evaluate an expression over sexagesimal literals");
  calc->add_option("expression", expression, "e.g. \"sqrt(2,36;15 - 1,40)\"")->required();
  calc->add_option("--heron", heron, "Approximate irrational sqrt() with N Heron steps");
  calc->callback([&] { action = [&] { return cmd_calc(ctx, expression, heron); }; });

  std::string value;
  auto* convert = app.add_subcommand("convert", "Show a number as base-60 digits and a fraction");
  convert->add_option("value", value)->required();
  convert->callback([&] { action = [&] { return cmd_convert(ctx, value); }; });

  auto* reciprocal = app.add_subcommand("reciprocal", "Reciprocal in base 60");
  reciprocal->add_option("value", value)->required();
  reciprocal->callback([&] { action = [&] { return cmd_reciprocal(ctx, value); }; });

  std::string seed;
  auto* sqrt = app.add_subcommand("sqrt", "Exact square root, or Heron approximation");
  sqrt->add_option("value", value)->required();
  sqrt->add_option("--heron", heron, "Heron steps when the root is irrational");
  sqrt->add_option("--seed", seed, "Heron seed (default (x+1)/2)");
  sqrt->callback([&] { action = [&] { return cmd_sqrt(ctx, value, heron, seed); }; });

  std::int64_t i1 = 0, i2 = 0, i3 = 0;
  std::int64_t k = 1;
  auto* triples = app.add_subcommand("triples", "Pythagorean triples");
  triples->require_subcommand(1);
  auto* gen = triples->add_subcommand("gen", "k*(m^2-n^2, 2mn, m^2+n^2)");
  gen->add_option("m", i1)->required();
  gen->add_option("n", i2)->required();
  gen->add_option("k", k);
  gen->callback([&] { action = [&] { return cmd_triples_gen(ctx, i1, i2, k); }; });
  auto* check = triples->add_subcommand("check", "Pythagorean and primitive flags");
  check->add_option("a", i1)->required();
  check->add_option("b", i2)->required();
  check->add_option("c", i3)->required();
  check->callback([&] { action = [&] { return cmd_triples_check(ctx, i1, i2, i3); }; });
  auto* dec = triples->add_subcommand("decompose", "Euclid parameters k, m, n");
  dec->add_option("a", i1)->required();
  dec->add_option("b", i2)->required();
  dec->add_option("c", i3)->required();
  dec->callback([&] { action = [&] { return cmd_triples_decompose(ctx, i1, i2, i3); }; });
  auto* list = triples->add_subcommand("list", "Primitive triples with c <= c_max");
  list->add_option("c_max", i1)->required();
  list->callback([&] { action = [&] { return cmd_triples_list(ctx, i1); }; });

  SolveRequest req;
  auto* solve = app.add_subcommand("solve", "Replay a tablet problem");
  solve->set_help_flag("--help", "Print this help message and exit");
  solve->add_option("problem", req.problem,
                    "smt1 smt3 smt3-l29..l32 pi pi-bruins pi-neugebauer pi-storehouse smt15 "
                    "smt15-p1 smt15-p2 smt19 bm85196 bm85196-inv ybc7289")
      ->required();
  const std::vector<std::pair<std::string, std::string>> params{
      {"s", "smt1: equal sides"},        {"half-base", "smt1: half the base"},
      {"enlarged", "smt15: enlarged width"}, {"aux", "smt15: second given number"},
      {"ext", "smt15: extension"},       {"f", "smt19: width shortfall fraction"},
      {"d", "smt19: diagonal"},          {"l", "bm85196: timber length"},
      {"h", "bm85196: wall height"},     {"slip", "bm85196: slip from the top"},
      {"foot", "bm85196: distance of the foot"}, {"area", "pi: storehouse area"},
      {"inner-d", "pi: inner diameter"}, {"wall", "pi: wall thickness"},
      {"a", "ybc7289: side"},            {"sqrt2", "ybc7289: sqrt(2) value"},
  };
  for (const auto& [name, help] : params) {
    req.given[name] = solve->add_option("--" + name, req.params[name], help);
  }
  solve->add_option("--heron", req.heron, "Allow Heron approximation of irrational roots");
  solve->add_flag("--verify-trace", req.verify, "Re-execute the emitted JSON trace");
  solve->callback([&] { action = [&] { return cmd_solve(ctx, req); }; });

  auto* constants = app.add_subcommand("constants", "Check the coefficient list and pi readings");
  constants->callback([&] { action = [&] { return cmd_constants(ctx); }; });

  RunResult result;
  std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? kOk : kUsage;
    return result;
  }
  ctx.globals.places_given = places_opt->count() > 0;

  try {
    result.exit_code = action ? action() : kUsage;
  } catch (const Error& e) {
    ctx.err << "error: " << e.what() << '\n';
    result.exit_code = is_usage_error(e.kind()) ? kUsage : kDomainError;
  } catch (const CLI::ValidationError& e) {
    ctx.err << "error: " << e.what() << '\n';
    result.exit_code = kUsage;
  }
  result.out = ctx.out.str();
  result.err = ctx.err.str();
  return result;
}

}  // namespace sexa::cli
