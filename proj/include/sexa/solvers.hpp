// include/sexa/solvers.hpp - Tablet computations replayed step by step.
//
// Every solver returns named result values together with the StepTrace that
// produced them. Square roots must come out exact; a solver throws
// Error{NotExactlySolvable} otherwise, unless SolverOptions permits a Heron
// approximation with a fixed number of iterations.

#pragma once

#include <optional>

#include "sexa/exact_number.hpp"
#include "sexa/trace.hpp"

namespace sexa {

struct SolverOptions {
  /// When set, irrational roots fall back to this many Heron steps from the
  /// seed (x + 1)/2 instead of failing.
  std::optional<int> heron_iterations;
};

namespace defaults {
// Isosceles triangle in a circle: sides 50, half base 30.
inline ExactNumber smt1_side() { return 50; }
inline ExactNumber smt1_half_base() { return 30; }
// Gate enlargement: 20 enlarged width, 30, extension 2;30.
inline ExactNumber smt15_enlarged() { return 20; }
inline ExactNumber smt15_aux() { return 30; }
inline ExactNumber smt15_ext() { return ExactNumber::fraction(5, 2); }
// Rectangle: width short of the length by 0;15 of it, diagonal 40.
inline ExactNumber smt19_fraction() { return ExactNumber::fraction(1, 4); }
inline ExactNumber smt19_diagonal() { return 40; }
// Timber against a wall: length 0;30, wall 0;30, slip 0;6 (nindan).
inline ExactNumber bm85196_length() { return ExactNumber::fraction(1, 2); }
inline ExactNumber bm85196_height() { return ExactNumber::fraction(1, 2); }
inline ExactNumber bm85196_slip() { return ExactNumber::fraction(1, 10); }
// Circular storehouse: area 7;10 sar, inner diameter 3 nindan, wall 0;0,50.
inline ExactNumber storehouse_area() { return ExactNumber::fraction(43, 6); }
inline ExactNumber storehouse_inner_diameter() { return 3; }
inline ExactNumber storehouse_wall() { return ExactNumber::fraction(1, 72); }
inline constexpr int storehouse_places = 4;
inline ExactNumber ybc7289_side() { return 1; }
}  // namespace defaults

/// Height, circumradius and apex offset of an isosceles triangle with equal
/// sides `side` and half base `half_base`.
/// Values: height, radius, apex.
ProblemResult solve_smt1(const ExactNumber& side, const ExactNumber& half_base,
                         const SolverOptions& opts = {});

enum class Smt3Line { L29, L30, L31, L32 };

/// Derives the coefficient list entries for the equilateral triangle (L29),
/// the 24/25 right triangle (L30), the square diagonal (L31) and the
/// rectangle diagonal (L32).
ProblemResult verify_smt3(Smt3Line line);

/// pi from the 0;57,36 circle coefficient: 25/8. Value: pi.
ProblemResult pi_bruins();
/// pi from the 0;57,36 hexagon-perimeter coefficient: 25/8. Value: pi.
ProblemResult pi_neugebauer();
/// pi = 4S/D^2 for a storehouse of area S, inner diameter and wall
/// thickness. Values: outer_diameter, diameter_squared, four_area,
/// reciprocal, pi. rendered["pi"] and rendered["reciprocal"] hold the
/// truncated digits at `places`.
ProblemResult pi_storehouse(const ExactNumber& area, const ExactNumber& inner_diameter,
                            const ExactNumber& wall, int places);

struct PiInterpretations {
  ProblemResult bruins;
  ProblemResult neugebauer;
  ProblemResult storehouse;
};

/// All three readings; throws Error{DomainError} for non-positive input.
PiInterpretations pi_interpretations(const ExactNumber& area = defaults::storehouse_area(),
                                     const ExactNumber& inner_diameter =
                                         defaults::storehouse_inner_diameter(),
                                     const ExactNumber& wall = defaults::storehouse_wall(),
                                     int places = defaults::storehouse_places);

enum class Smt15Problem { P1, P2 };

/// Gate enlargement. The preamble (halvings, reciprocal of 5, ...) is
/// replayed literally to reach radius_like = 12;30 under the defaults.
/// Values: radius_like, offset, half_width, width.
ProblemResult solve_smt15(Smt15Problem problem,
                          const ExactNumber& enlarged = defaults::smt15_enlarged(),
                          const ExactNumber& aux = defaults::smt15_aux(),
                          const ExactNumber& ext = defaults::smt15_ext(),
                          const SolverOptions& opts = {});

/// Rectangle with width = (1 - f) * length and diagonal d.
/// Values: ratio, coefficient, x, y, diagonal_check.
ProblemResult solve_smt19(const ExactNumber& f, const ExactNumber& d,
                          const SolverOptions& opts = {});

/// Timber of length l against a wall of height h. Given the slip from the
/// top, finds the foot distance (forward); given the foot distance, finds
/// the slip (inverse). Exactly one of slip and foot must be set.
/// Values: forward -> foot; inverse -> slip.
ProblemResult solve_bm85196(const ExactNumber& l, const ExactNumber& h,
                            const std::optional<ExactNumber>& slip,
                            const std::optional<ExactNumber>& foot,
                            const SolverOptions& opts = {});

/// Diagonal of a square of side a with a supplied sqrt(2) approximation.
/// Value: diagonal.
ProblemResult ybc7289_diagonal(const ExactNumber& a, const ExactNumber& sqrt2);

}  // namespace sexa
