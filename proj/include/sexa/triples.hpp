// include/sexa/triples.hpp - Pythagorean triples and Euclid parameters.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "sexa/exact_number.hpp"

namespace sexa {

/// Integer right triangle: legs a, b and hypotenuse c with a^2 + b^2 = c^2.
class Triple {
public:
  /// Throws Error{InvalidParams} unless all sides are positive and Pythagorean.
  Triple(std::int64_t a, std::int64_t b, std::int64_t c);

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }

  /// Same triangle with the leg that is odd in the primitive part first.
  Triple normalized() const;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;

private:
  std::int64_t a_;
  std::int64_t b_;
  std::int64_t c_;
};

std::ostream& operator<<(std::ostream& os, const Triple& t);

/// Generator data for k*(m^2 - n^2, 2mn, m^2 + n^2).
struct EuclidParams {
  std::int64_t k = 1;
  std::int64_t m = 2;
  std::int64_t n = 1;

  /// Throws Error{InvalidParams} unless m > n > 0, gcd(m, n) == 1,
  /// m and n are not both odd, and k >= 1.
  void validate() const;

  friend bool operator==(const EuclidParams&, const EuclidParams&) = default;
};

std::ostream& operator<<(std::ostream& os, const EuclidParams& p);

struct RationalTriple {
  ExactNumber a;
  ExactNumber b;
  ExactNumber c;

  friend bool operator==(const RationalTriple&, const RationalTriple&) = default;
};

bool is_pythagorean(std::int64_t a, std::int64_t b, std::int64_t c);
bool is_primitive(const Triple& t);

Triple euclid_generate(const EuclidParams& p);

/// The unique (k, m, n) generating t up to leg order.
EuclidParams decompose(const Triple& t);

/// All primitive triples with c <= c_max, odd leg first, sorted by
/// (c, smaller leg). Empty when c_max < 5.
std::vector<Triple> enumerate_primitives(std::int64_t c_max);

/// Componentwise q * t. Throws Error{DomainError} for q <= 0.
RationalTriple scale(const Triple& t, const ExactNumber& q);

struct RectangleSides {
  ExactNumber length;  // normalized to 1
  ExactNumber width;
  Triple triple;        // integer triangle (length, width, diagonal) * denominator
  EuclidParams params;  // its Euclid decomposition
};

/// Sides (1, y) of a rectangle whose diagonal is dc, so 1 + y^2 = dc^2 with
/// y rational and positive. Throws Error{NoSolution} when no such y exists.
RectangleSides sides_from_diagonal_constant(const ExactNumber& dc);

}  // namespace sexa
