#include "sexa/triples.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>
#include <tuple>

#include "sexa/error.hpp"
#include "sexa/roots.hpp"

namespace sexa {

namespace {

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorKind::InvalidParams, "value exceeds 64-bit range: " + v.str());
  }
  return v.convert_to<std::int64_t>();
}

}  // namespace

bool is_pythagorean(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a < 1 || b < 1 || c < 1) return false;
  const BigInt ba = a, bb = b, bc = c;
  return ba * ba + bb * bb == bc * bc;
}

Triple::Triple(std::int64_t a, std::int64_t b, std::int64_t c) : a_(a), b_(b), c_(c) {
  if (!is_pythagorean(a, b, c)) {
    throw Error(ErrorKind::InvalidParams, "(" + std::to_string(a) + ", " + std::to_string(b) +
                                              ", " + std::to_string(c) +
                                              ") is not a Pythagorean triple");
  }
}

Triple Triple::normalized() const {
  const std::int64_t k = std::gcd(std::gcd(a_, b_), c_);
  if ((a_ / k) % 2 == 1) return *this;
  return Triple(b_, a_, c_);
}

std::ostream& operator<<(std::ostream& os, const Triple& t) {
  return os << '(' << t.a() << ", " << t.b() << ", " << t.c() << ')';
}

void EuclidParams::validate() const {
  if (k < 1) throw Error(ErrorKind::InvalidParams, "scale k must be at least 1");
  if (!(m > n && n > 0)) throw Error(ErrorKind::InvalidParams, "need m > n > 0");
  if (std::gcd(m, n) != 1) throw Error(ErrorKind::InvalidParams, "m and n must be coprime");
  if (m % 2 == 1 && n % 2 == 1) throw Error(ErrorKind::InvalidParams, "m and n must not both be odd");
}

std::ostream& operator<<(std::ostream& os, const EuclidParams& p) {
  return os << "k=" << p.k << " m=" << p.m << " n=" << p.n;
}

bool is_primitive(const Triple& t) {
  return std::gcd(std::gcd(t.a(), t.b()), t.c()) == 1;
}

Triple euclid_generate(const EuclidParams& p) {
  p.validate();
  const BigInt k = p.k, m = p.m, n = p.n;
  return Triple(to_int64(k * (m * m - n * n)), to_int64(2 * k * m * n),
                to_int64(k * (m * m + n * n)));
}

EuclidParams decompose(const Triple& t) {
  const std::int64_t k = std::gcd(std::gcd(t.a(), t.b()), t.c());
  const Triple prim = t.normalized();
  const std::int64_t odd_leg = prim.a() / k;
  const std::int64_t hyp = prim.c() / k;
  // m^2 = (c + odd)/2, n^2 = (c - odd)/2 over the primitive part.
  const BigInt m = isqrt(BigInt((hyp + odd_leg) / 2));
  const BigInt n = isqrt(BigInt((hyp - odd_leg) / 2));
  EuclidParams p{k, to_int64(m), to_int64(n)};
  p.validate();
  return p;
}

std::vector<Triple> enumerate_primitives(std::int64_t c_max) {
  std::vector<Triple> out;
  if (c_max < 5) return out;
  for (std::int64_t m = 2; m * m + 1 <= c_max; ++m) {
    for (std::int64_t n = 1; n < m && m * m + n * n <= c_max; ++n) {
      if ((m - n) % 2 == 0 || std::gcd(m, n) != 1) continue;
      out.push_back(euclid_generate({1, m, n}).normalized());
    }
  }
  std::sort(out.begin(), out.end(), [](const Triple& x, const Triple& y) {
    return std::tuple(x.c(), std::min(x.a(), x.b())) < std::tuple(y.c(), std::min(y.a(), y.b()));
  });
  return out;
}

RationalTriple scale(const Triple& t, const ExactNumber& q) {
  if (q.sign() <= 0) throw Error(ErrorKind::DomainError, "scale factor must be positive");
  return {q * t.a(), q * t.b(), q * t.c()};
}

RectangleSides sides_from_diagonal_constant(const ExactNumber& dc) {
  if (dc <= ExactNumber(1)) {
    throw Error(ErrorKind::NoSolution, "diagonal " + dc.to_fraction_string() +
                                           " leaves no positive width for unit length");
  }
  // dc = p/q: the integer triangle is (q, r, p) with r^2 = p^2 - q^2.
  const BigInt& q = dc.denominator();
  const BigInt p = dc.numerator();
  const BigInt r2 = p * p - q * q;
  const BigInt r = isqrt(r2);
  if (r * r != r2) {
    throw Error(ErrorKind::NoSolution, "diagonal " + dc.to_fraction_string() +
                                           " is not the hypotenuse of a rational right triangle"
                                           " with unit leg");
  }
  Triple t(to_int64(q), to_int64(r), to_int64(p));
  return {ExactNumber(1), ExactNumber(r, q), t, decompose(t)};
}

}  // namespace sexa
