#include "sexa/solvers.hpp"

#include <utility>

#include "sexa/error.hpp"
#include "sexa/notation.hpp"
#include "sexa/roots.hpp"
#include "sexa/triples.hpp"

namespace sexa {

namespace {

std::string sx(const ExactNumber& x) { return show(x, 6); }

class TraceBuilder {
public:
  TraceBuilder(ProblemId id, SolverOptions opts) : opts_(std::move(opts)) {
    trace_.problem_id = id;
  }

  ExactNumber step(StepOp op, std::string label, std::vector<ExactNumber> operands) {
    ExactNumber result = evaluate_step(op, operands);
    trace_.steps.push_back({static_cast<int>(trace_.steps.size()) + 1, std::move(label), op,
                            std::move(operands), result});
    return result;
  }

  /// Exact root, or a Heron approximation when the options allow it.
  ExactNumber root(const std::string& label, const ExactNumber& x) {
    if (sqrt_exact(x)) return step(StepOp::sqrt, label, {x});
    if (opts_.heron_iterations) {
      const int n = *opts_.heron_iterations;
      return step(StepOp::heron, label + " (approximated by " + std::to_string(n) + " Heron steps)",
                  {x, heron_default_seed(x), ExactNumber(n)});
    }
    throw Error(ErrorKind::NotExactlySolvable,
                std::string(to_string(trace_.problem_id)) + ": " + sx(x) +
                    " is not the square of a rational number");
  }

  ProblemResult finish(std::vector<std::pair<std::string, ExactNumber>> values) && {
    return {std::move(values), std::move(trace_), {}};
  }

private:
  SolverOptions opts_;
  StepTrace trace_;
};

void require_positive(const ExactNumber& x, const char* what) {
  if (x.sign() <= 0) {
    throw Error(ErrorKind::DomainError, std::string(what) + " must be positive, got " + sx(x));
  }
}

ProblemResult smt3_line29() {
  TraceBuilder b(ProblemId::SMT3_L29, {});
  const ExactNumber half = ExactNumber::fraction(1, 2);
  auto half2 = b.step(StepOp::square, "square 0;30, half the side", {half});
  auto h2 = b.step(StepOp::sub, "subtract 0;15 from 1, the squared side: the height squared",
                   {ExactNumber(1), half2});
  auto root3 = b.step(StepOp::heron, "sqrt(3) by one Heron step from 2: 1;45", {3, 2, 1});
  auto height = b.step(StepOp::halve, "halve 1;45: 0;52,30 is the height", {root3});
  return std::move(b).finish({{"height_squared", h2}, {"sqrt3", root3}, {"height", height}});
}

ProblemResult smt3_line30() {
  TraceBuilder b(ProblemId::SMT3_L30, {});
  const RationalTriple unit = scale(Triple(7, 24, 25), ExactNumber::fraction(1, 25));
  auto leg = b.step(StepOp::given,
                    "put down 0;16,48 = 7/25, the short leg of (7,24,25)/25; the coefficient "
                    "0;57,36 is 24/25, not 7/25",
                    {unit.a});
  auto leg2 = b.step(StepOp::square, "square 0;16,48", {leg});
  auto rest = b.step(StepOp::sub, "subtract from 1, the squared hypotenuse", {ExactNumber(1), leg2});
  auto coefficient = b.step(StepOp::sqrt, "square root: 0;57,36 = 24/25 is the coefficient", {rest});
  auto coefficient2 = b.step(StepOp::square, "square 0;57,36", {coefficient});
  auto sum = b.step(StepOp::add, "(7/25)^2 + (24/25)^2 = 25^2/25^2", {leg2, coefficient2});
  return std::move(b).finish(
      {{"complement", leg}, {"constant", coefficient}, {"identity_sum", sum}});
}

ProblemResult smt3_line31() {
  TraceBuilder b(ProblemId::SMT3_L31, {});
  auto coarse = b.step(StepOp::given, "put down 1;30, the common value of sqrt(2)",
                       {named_constant(ConstantId::SQRT2_COARSE).value});
  auto quotient = b.step(StepOp::div, "divide 2 by 1;30", {2, coarse});
  auto sum = b.step(StepOp::add, "add 1;30 and 1;20", {coarse, quotient});
  auto fine = b.step(StepOp::halve, "halve: 1;25 is the diagonal of a unit square", {sum});
  auto squared = b.step(StepOp::square, "square 1;25", {fine});
  auto error = b.step(StepOp::sub, "subtract 2: excess of (1;25)^2 over 2", {squared, 2});
  return std::move(b).finish({{"sqrt2", fine}, {"squared", squared}, {"squared_error", error}});
}

ProblemResult smt3_line32() {
  TraceBuilder b(ProblemId::SMT3_L32, {});
  const ExactNumber dc = ExactNumber::fraction(5, 4);
  const RectangleSides sides = sides_from_diagonal_constant(dc);
  auto diagonal = b.step(StepOp::given, "put down 1;15, the diagonal of the rectangle", {dc});
  auto diagonal2 = b.step(StepOp::square, "square 1;15", {diagonal});
  auto length = b.step(StepOp::given, "put down 1 as the length", {sides.length});
  auto length2 = b.step(StepOp::square, "square 1", {length});
  auto rest = b.step(StepOp::sub, "subtract 1 from 1;33,45", {diagonal2, length2});
  auto width = b.step(StepOp::sqrt, "square root: 0;45 is the width", {rest});
  if (width != sides.width) {
    throw Error(ErrorKind::NoSolution, "rectangle width disagrees with its Euclid decomposition");
  }
  return std::move(b).finish({{"diagonal", diagonal}, {"length", length}, {"width", width}});
}

}  // namespace

ProblemResult solve_smt1(const ExactNumber& side, const ExactNumber& half_base,
                         const SolverOptions& opts) {
  require_positive(half_base, "half base");
  if (side <= half_base) {
    throw Error(ErrorKind::DomainError, "the equal sides must exceed the half base");
  }
  TraceBuilder b(ProblemId::SMT1, opts);
  auto side2 = b.step(StepOp::square, "square " + sx(side) + ", the length", {side});
  auto half2 = b.step(StepOp::square, "square " + sx(half_base) + ", half the base", {half_base});
  auto height2 = b.step(StepOp::sub, "subtract " + sx(half2) + " from " + sx(side2), {side2, half2});
  auto height = b.root("square root of " + sx(height2) + ": the complete height", height2);
  auto h2 = b.step(StepOp::square, "square the height " + sx(height), {height});
  auto rhs = b.step(StepOp::add, "add " + sx(h2) + " and " + sx(half2), {h2, half2});
  auto twice = b.step(StepOp::mul, "multiply the height " + sx(height) + " by 2", {height, 2});
  auto inv = b.step(StepOp::reciprocal, "reciprocal of " + sx(twice), {twice});
  auto radius = b.step(StepOp::mul, "multiply " + sx(inv) + " by " + sx(rhs) + ": the radius",
                       {inv, rhs});
  auto apex = b.step(StepOp::sub, "subtract the radius " + sx(radius) + " from " + sx(height),
                     {height, radius});
  return std::move(b).finish({{"height", height}, {"radius", radius}, {"apex", apex}});
}

ProblemResult verify_smt3(Smt3Line line) {
  switch (line) {
    case Smt3Line::L29: return smt3_line29();
    case Smt3Line::L30: return smt3_line30();
    case Smt3Line::L31: return smt3_line31();
    case Smt3Line::L32: return smt3_line32();
  }
  throw Error(ErrorKind::InvalidParams, "unknown coefficient line");
}

ProblemResult pi_bruins() {
  TraceBuilder b(ProblemId::PI_BRUINS, {});
  auto k = b.step(StepOp::given, "put down 0;57,36, the circle coefficient",
                  {ExactNumber::fraction(24, 25)});
  auto four_k = b.step(StepOp::mul, "c^2/(4 pi) = 0;57,36 c^2/12: multiply 0;57,36 by 4", {k, 4});
  auto pi = b.step(StepOp::div, "divide 12 by 3;50,24: pi", {12, four_k});
  return std::move(b).finish({{"pi", pi}});
}

ProblemResult pi_neugebauer() {
  TraceBuilder b(ProblemId::PI_NEUGEBAUER, {});
  auto k = b.step(StepOp::given, "put down 0;57,36 = 3/pi, hexagon over circle perimeter",
                  {ExactNumber::fraction(24, 25)});
  auto inv = b.step(StepOp::reciprocal, "reciprocal of 0;57,36", {k});
  auto pi = b.step(StepOp::mul, "multiply 3 by 1;2,30: pi", {3, inv});
  return std::move(b).finish({{"pi", pi}});
}

ProblemResult pi_storehouse(const ExactNumber& area, const ExactNumber& inner_diameter,
                            const ExactNumber& wall, int places) {
  require_positive(area, "area");
  require_positive(inner_diameter, "inner diameter");
  require_positive(wall, "wall thickness");
  if (places < 1) throw Error(ErrorKind::DomainError, "places must be at least 1");

  TraceBuilder b(ProblemId::PI_STOREHOUSE, {});
  auto walls = b.step(StepOp::mul, "multiply the wall " + sx(wall) + " by 2", {wall, 2});
  auto outer = b.step(StepOp::add, "add to the inner diameter " + sx(inner_diameter) + ": D",
                      {inner_diameter, walls});
  auto outer2 = b.step(StepOp::square, "square D = " + sx(outer), {outer});
  auto four_area = b.step(StepOp::mul, "multiply the area " + sx(area) + " by 4", {area, 4});
  auto inv = b.step(StepOp::reciprocal, "reciprocal of D^2 = " + sx(outer2), {outer2});
  auto pi = b.step(StepOp::mul, "multiply " + sx(four_area) + " by the reciprocal: pi",
                   {four_area, inv});
  ProblemResult r = std::move(b).finish({{"outer_diameter", outer},
                                         {"diameter_squared", outer2},
                                         {"four_area", four_area},
                                         {"reciprocal", inv},
                                         {"pi", pi}});
  r.rendered.emplace("reciprocal", format(inv, places));
  r.rendered.emplace("pi", format(pi, places));
  return r;
}

PiInterpretations pi_interpretations(const ExactNumber& area, const ExactNumber& inner_diameter,
                                     const ExactNumber& wall, int places) {
  return {pi_bruins(), pi_neugebauer(), pi_storehouse(area, inner_diameter, wall, places)};
}

ProblemResult solve_smt15(Smt15Problem problem, const ExactNumber& enlarged,
                          const ExactNumber& aux, const ExactNumber& ext,
                          const SolverOptions& opts) {
  require_positive(enlarged, "enlarged width");
  require_positive(aux, "second given number");
  if (ext.sign() < 0) throw Error(ErrorKind::DomainError, "extension must not be negative");

  TraceBuilder b(problem == Smt15Problem::P1 ? ProblemId::SMT15_P1 : ProblemId::SMT15_P2, opts);
  // Preamble, replayed as written on the tablet.
  auto half_enlarged = b.step(StepOp::halve, "halve " + sx(enlarged) + " of the enlargement", {enlarged});
  auto half_aux = b.step(StepOp::halve, "halve " + sx(aux), {aux});
  auto diff = b.step(StepOp::sub, "subtract " + sx(half_aux) + " from " + sx(enlarged),
                     {enlarged, half_aux});
  auto sq = b.step(StepOp::square, "square " + sx(half_enlarged), {half_enlarged});
  auto inv = b.step(StepOp::reciprocal, "make the reciprocal of " + sx(diff), {diff});
  auto prod = b.step(StepOp::mul, "multiply " + sx(inv) + " by " + sx(sq), {inv, sq});
  auto half_prod = b.step(StepOp::halve, "halve " + sx(prod), {prod});
  auto radius_like = b.step(StepOp::add, "add " + sx(ext) + " to " + sx(half_prod),
                            {half_prod, ext});

  ExactNumber offset;
  if (problem == Smt15Problem::P1) {
    offset = b.step(StepOp::sub, "subtract " + sx(ext) + " from " + sx(radius_like),
                    {radius_like, ext});
  } else {
    auto both = b.step(StepOp::add, "add the first " + sx(ext) + " and the second " + sx(ext),
                       {ext, ext});
    offset = b.step(StepOp::sub, "subtract " + sx(both) + " from " + sx(radius_like),
                    {radius_like, both});
  }
  auto r2 = b.step(StepOp::square, "square " + sx(radius_like), {radius_like});
  auto o2 = b.step(StepOp::square, "square " + sx(offset), {offset});
  auto rest = b.step(StepOp::sub, "subtract " + sx(o2) + " from " + sx(r2), {r2, o2});
  if (rest.sign() < 0) {
    throw Error(ErrorKind::NoRealChord, "offset " + sx(offset) + " lies beyond " + sx(radius_like));
  }
  auto half_width = b.root("what is the square root of " + sx(rest) + "?", rest);
  auto width = b.step(StepOp::mul, "multiply " + sx(half_width) + " by 2: the space between",
                      {half_width, 2});
  return std::move(b).finish({{"radius_like", radius_like},
                              {"offset", offset},
                              {"half_width", half_width},
                              {"width", width}});
}

ProblemResult solve_smt19(const ExactNumber& f, const ExactNumber& d, const SolverOptions& opts) {
  if (f.sign() <= 0 || f >= ExactNumber(1)) {
    throw Error(ErrorKind::DomainError, "the fraction must lie strictly between 0 and 1");
  }
  require_positive(d, "diagonal");

  TraceBuilder b(ProblemId::SMT19_P1, opts);
  auto one = b.step(StepOp::given, "put down 1 of the length", {1});
  auto ratio = b.step(StepOp::sub, "subtract " + sx(f) + " from 1", {one, f});
  auto one2 = b.step(StepOp::square, "square 1 of the length", {one});
  auto ratio2 = b.step(StepOp::square, "square " + sx(ratio) + " of the width", {ratio});
  auto sum = b.step(StepOp::add, "add 1 and " + sx(ratio2) + " together", {one2, ratio2});
  auto coefficient = b.root("what is the square root of " + sx(sum) + "?", sum);
  auto inv = b.step(StepOp::reciprocal, "make the reciprocal of " + sx(coefficient), {coefficient});
  auto scaled = b.step(StepOp::mul, "multiply " + sx(inv) + " by " + sx(d) + " of the diagonal",
                       {inv, d});
  auto x = b.step(StepOp::mul, "multiply " + sx(scaled) + " by 1 of the length: the length",
                  {scaled, one});
  auto y = b.step(StepOp::mul, "multiply " + sx(scaled) + " by " + sx(ratio) + ": the width",
                  {scaled, ratio});
  auto x2 = b.step(StepOp::square, "square the length " + sx(x), {x});
  auto y2 = b.step(StepOp::square, "square the width " + sx(y), {y});
  auto d2 = b.step(StepOp::add, "add " + sx(x2) + " and " + sx(y2), {x2, y2});
  auto check = b.root("square root of " + sx(d2) + ": the diagonal", d2);
  return std::move(b).finish({{"ratio", ratio},
                              {"coefficient", coefficient},
                              {"x", x},
                              {"y", y},
                              {"diagonal_check", check}});
}

ProblemResult solve_bm85196(const ExactNumber& l, const ExactNumber& h,
                            const std::optional<ExactNumber>& slip,
                            const std::optional<ExactNumber>& foot, const SolverOptions& opts) {
  if (slip.has_value() == foot.has_value()) {
    throw Error(ErrorKind::AmbiguousQuery, "give exactly one of the slip and the foot distance");
  }
  require_positive(l, "timber length");
  require_positive(h, "wall height");

  if (slip) {
    if (slip->sign() < 0 || *slip >= h) {
      throw Error(ErrorKind::DomainError, "slip must satisfy 0 <= slip < height");
    }
    TraceBuilder b(ProblemId::BM85196_FWD, opts);
    auto l2 = b.step(StepOp::square, "square " + sx(l), {l});
    auto top = b.step(StepOp::sub, "subtract " + sx(*slip) + " from " + sx(h), {h, *slip});
    auto top2 = b.step(StepOp::square, "square " + sx(top), {top});
    auto rest = b.step(StepOp::sub, "subtract " + sx(top2) + " from " + sx(l2), {l2, top2});
    if (rest.sign() < 0) {
      throw Error(ErrorKind::NoSolution, "the timber cannot reach " + sx(top) + " up the wall");
    }
    auto d = b.root("what is the square root of " + sx(rest) + "?", rest);
    return std::move(b).finish(
        {{"length_squared", l2}, {"top", top}, {"top_squared", top2}, {"radicand", rest}, {"foot", d}});
  }

  require_positive(*foot, "foot distance");
  TraceBuilder b(ProblemId::BM85196_INV, opts);
  auto l2 = b.step(StepOp::square, "square " + sx(l), {l});
  auto d2 = b.step(StepOp::square, "square " + sx(*foot), {*foot});
  auto rest = b.step(StepOp::sub, "subtract " + sx(d2) + " from " + sx(l2), {l2, d2});
  if (rest.sign() < 0) {
    throw Error(ErrorKind::NoSolution, "foot distance " + sx(*foot) + " exceeds the timber");
  }
  auto top = b.root("what is the square root of " + sx(rest) + "?", rest);
  auto down = b.step(StepOp::sub, "subtract " + sx(top) + " from " + sx(h), {h, top});
  if (down.sign() < 0) {
    throw Error(ErrorKind::NoSolution, "the timber top would stand above the wall");
  }
  return std::move(b).finish(
      {{"length_squared", l2}, {"foot_squared", d2}, {"radicand", rest}, {"top", top}, {"slip", down}});
}

ProblemResult ybc7289_diagonal(const ExactNumber& a, const ExactNumber& sqrt2) {
  require_positive(a, "side");
  require_positive(sqrt2, "sqrt(2) approximation");
  TraceBuilder b(ProblemId::YBC7289, {});
  auto k = b.step(StepOp::given, "put down " + sx(sqrt2) + " for sqrt(2)", {sqrt2});
  auto diagonal = b.step(StepOp::mul, "multiply the side " + sx(a) + " by " + sx(k), {a, k});
  return std::move(b).finish({{"diagonal", diagonal}});
}

}  // namespace sexa
