// include/sexa/exact_number.hpp - Arbitrary-precision signed rational.

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sexa {

using BigInt = boost::multiprecision::cpp_int;

/// A rational number kept in canonical reduced form.
///
/// The numerator carries the sign; the denominator is always positive and
/// gcd(|numerator|, denominator) == 1. Zero is stored as 0/1. Every value in
/// the engine is an ExactNumber; sexagesimal digits are only a rendered view.
class ExactNumber {
public:
  ExactNumber() = default;
  ExactNumber(std::int64_t value) : num_(value) {}  // NOLINT(implicit)
  explicit ExactNumber(BigInt value) : num_(std::move(value)) {}

  /// Reduces the fraction. Throws Error{DivisionByZero} when den == 0.
  ExactNumber(BigInt num, BigInt den);

  static ExactNumber fraction(std::int64_t num, std::int64_t den) {
    return ExactNumber(BigInt(num), BigInt(den));
  }

  /// -1, 0 or +1.
  int sign() const { return num_.sign(); }
  /// |numerator|.
  BigInt numerator() const { return boost::multiprecision::abs(num_); }
  BigInt signed_numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }

  ExactNumber abs() const;
  ExactNumber operator-() const;

  ExactNumber& operator+=(const ExactNumber& rhs);
  ExactNumber& operator-=(const ExactNumber& rhs);
  ExactNumber& operator*=(const ExactNumber& rhs);
  /// Throws Error{DivisionByZero} when rhs is zero.
  ExactNumber& operator/=(const ExactNumber& rhs);

  friend ExactNumber operator+(ExactNumber lhs, const ExactNumber& rhs) { return lhs += rhs; }
  friend ExactNumber operator-(ExactNumber lhs, const ExactNumber& rhs) { return lhs -= rhs; }
  friend ExactNumber operator*(ExactNumber lhs, const ExactNumber& rhs) { return lhs *= rhs; }
  friend ExactNumber operator/(ExactNumber lhs, const ExactNumber& rhs) { return lhs /= rhs; }

  friend bool operator==(const ExactNumber& a, const ExactNumber& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const ExactNumber& a, const ExactNumber& b);

  /// "num/den", or just "num" for integers.
  std::string to_fraction_string() const;

private:
  void normalize();

  BigInt num_{0};
  BigInt den_{1};
};

std::ostream& operator<<(std::ostream& os, const ExactNumber& x);

enum class BinaryOp { add, sub, mul };
enum class Comparison { LT, EQ, GT };

ExactNumber binop(BinaryOp op, const ExactNumber& x, const ExactNumber& y);
ExactNumber square(const ExactNumber& x);
/// Throws Error{DivisionByZero} when y is zero.
ExactNumber divide(const ExactNumber& x, const ExactNumber& y);
/// Throws Error{ZeroInput} when x is zero.
ExactNumber reciprocal_exact(const ExactNumber& x);
Comparison compare(const ExactNumber& x, const ExactNumber& y);

/// True when both the reduced numerator and denominator factor over {2, 3, 5},
/// i.e. when x and 1/x both have finite base-60 expansions.
/// Throws Error{ZeroInput} when x is zero.
bool is_regular(const ExactNumber& x);

/// True when n > 0 has no prime factor other than 2, 3 and 5.
bool is_five_smooth(BigInt n);

}  // namespace sexa
