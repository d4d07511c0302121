#include "sexa/exact_number.hpp"

#include <ostream>

#include "sexa/error.hpp"

namespace sexa {

ExactNumber::ExactNumber(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) {
    throw Error(ErrorKind::DivisionByZero, "zero denominator");
  }
  normalize();
}

void ExactNumber::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

ExactNumber ExactNumber::abs() const {
  ExactNumber r = *this;
  if (r.num_.sign() < 0) r.num_ = -r.num_;
  return r;
}

ExactNumber ExactNumber::operator-() const {
  ExactNumber r = *this;
  r.num_ = -r.num_;
  return r;
}

ExactNumber& ExactNumber::operator+=(const ExactNumber& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

ExactNumber& ExactNumber::operator-=(const ExactNumber& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

ExactNumber& ExactNumber::operator*=(const ExactNumber& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

ExactNumber& ExactNumber::operator/=(const ExactNumber& rhs) {
  if (rhs.is_zero()) {
    throw Error(ErrorKind::DivisionByZero, "division by zero");
  }
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const ExactNumber& a, const ExactNumber& b) {
  // Denominators are positive, so cross-multiplication preserves order.
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExactNumber::to_fraction_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const ExactNumber& x) {
  return os << x.to_fraction_string();
}

ExactNumber binop(BinaryOp op, const ExactNumber& x, const ExactNumber& y) {
  switch (op) {
    case BinaryOp::add: return x + y;
    case BinaryOp::sub: return x - y;
    case BinaryOp::mul: return x * y;
  }
  throw Error(ErrorKind::InvalidParams, "unknown binary operation");
}

ExactNumber square(const ExactNumber& x) { return x * x; }

ExactNumber divide(const ExactNumber& x, const ExactNumber& y) { return x / y; }

ExactNumber reciprocal_exact(const ExactNumber& x) {
  if (x.is_zero()) {
    throw Error(ErrorKind::ZeroInput, "zero has no reciprocal");
  }
  return ExactNumber(x.denominator(), x.signed_numerator());
}

Comparison compare(const ExactNumber& x, const ExactNumber& y) {
  const auto c = x <=> y;
  if (c < 0) return Comparison::LT;
  if (c > 0) return Comparison::GT;
  return Comparison::EQ;
}

bool is_five_smooth(BigInt n) {
  if (n.sign() <= 0) return false;
  for (int p : {2, 3, 5}) {
    while (n % p == 0) n /= p;
  }
  return n == 1;
}

bool is_regular(const ExactNumber& x) {
  if (x.is_zero()) {
    throw Error(ErrorKind::ZeroInput, "regularity of zero is undefined");
  }
  return is_five_smooth(x.numerator()) && is_five_smooth(x.denominator());
}

}  // namespace sexa
