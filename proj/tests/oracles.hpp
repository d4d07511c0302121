// tests/oracles.hpp - Independent reference computations used by the tests.
//
// Nothing here touches the engine: fractions are plain int64 pairs, digit
// expansions are schoolbook long division, and triples come from scanning.

#pragma once

#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace oracle {

struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Frac(std::int64_t n = 0, std::int64_t d = 1) : num(n), den(d) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  friend Frac operator+(Frac a, Frac b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
  friend Frac operator-(Frac a, Frac b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Frac operator*(Frac a, Frac b) { return {a.num * b.num, a.den * b.den}; }
  friend Frac operator/(Frac a, Frac b) { return {a.num * b.den, a.den * b.num}; }
  friend bool operator==(Frac a, Frac b) { return a.num == b.num && a.den == b.den; }
};

/// Positional value of base-60 digit groups: sum int_i 60^i + sum frac_j 60^-j.
inline Frac positional(const std::vector<std::int64_t>& int_digits,
                       const std::vector<std::int64_t>& frac_digits) {
  Frac v;
  for (auto d : int_digits) v = v * Frac(60) + Frac(d);
  Frac place(1, 60);
  for (auto d : frac_digits) {
    v = v + Frac(d) * place;
    place = place * Frac(1, 60);
  }
  return v;
}

/// Long division of num/den (both positive) in base 60: integer part and
/// `places` truncated fractional digits, plus whether the remainder vanished.
struct Expansion {
  std::int64_t whole = 0;
  std::vector<int> frac;
  bool terminated = false;
};

inline Expansion long_divide(std::int64_t num, std::int64_t den, int places) {
  Expansion e;
  e.whole = num / den;
  std::int64_t rem = num % den;
  for (int i = 0; i < places && rem != 0; ++i) {
    rem *= 60;
    e.frac.push_back(static_cast<int>(rem / den));
    rem %= den;
  }
  e.terminated = rem == 0;
  while (!e.terminated && static_cast<int>(e.frac.size()) < places) e.frac.push_back(0);
  return e;
}

/// Digit string "w;d1,d2,..." of the expansion.
inline std::string render(const Expansion& e) {
  std::string s = std::to_string(e.whole);
  for (std::size_t i = 0; i < e.frac.size(); ++i) {
    s += i == 0 ? ';' : ',';
    s += std::to_string(e.frac[i]);
  }
  return s;
}

using Tri = std::tuple<std::int64_t, std::int64_t, std::int64_t>;

/// Every primitive triple with a <= b < c <= c_max by exhaustive search,
/// reported odd leg first.
inline std::set<Tri> scan_primitives(std::int64_t c_max) {
  std::set<Tri> out;
  for (std::int64_t c = 1; c <= c_max; ++c) {
    for (std::int64_t a = 1; a < c; ++a) {
      for (std::int64_t b = a; b < c; ++b) {
        if (a * a + b * b != c * c) continue;
        if (std::gcd(std::gcd(a, b), c) != 1) continue;
        if (a % 2 == 1) {
          out.emplace(a, b, c);
        } else {
          out.emplace(b, a, c);
        }
      }
    }
  }
  return out;
}

/// (k, m, n) with k(m^2-n^2, 2mn, m^2+n^2) equal to {a, b} up to order, by search.
inline std::tuple<std::int64_t, std::int64_t, std::int64_t> brute_decompose(std::int64_t a,
                                                                           std::int64_t b,
                                                                           std::int64_t c) {
  for (std::int64_t k = 1; k <= c; ++k) {
    if (a % k || b % k || c % k) continue;
    for (std::int64_t m = 2; m * m <= c; ++m) {
      for (std::int64_t n = 1; n < m; ++n) {
        if (std::gcd(m, n) != 1 || (m % 2 == 1 && n % 2 == 1)) continue;
        const std::int64_t x = k * (m * m - n * n), y = 2 * k * m * n, z = k * (m * m + n * n);
        if (z == c && ((x == a && y == b) || (x == b && y == a))) return {k, m, n};
      }
    }
  }
  return {0, 0, 0};
}

}  // namespace oracle
