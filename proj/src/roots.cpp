#include "sexa/roots.hpp"

#include "sexa/error.hpp"

namespace sexa {

NamedConstant named_constant(ConstantId id) {
  switch (id) {
    case ConstantId::SQRT2_COARSE: return {id, ExactNumber::fraction(3, 2)};
    case ConstantId::SQRT2_FINE: return {id, ExactNumber::fraction(17, 12)};
    case ConstantId::SQRT3: return {id, ExactNumber::fraction(7, 4)};
    case ConstantId::PI_COMMON: return {id, ExactNumber(3)};
    case ConstantId::PI_BRUINS: return {id, ExactNumber::fraction(25, 8)};
    case ConstantId::PI_FINE: return {id, ExactNumber::fraction(63, 20)};
  }
  throw Error(ErrorKind::InvalidParams, "unknown constant");
}

std::string_view to_string(ConstantId id) noexcept {
  switch (id) {
    case ConstantId::SQRT2_COARSE: return "SQRT2_COARSE";
    case ConstantId::SQRT2_FINE: return "SQRT2_FINE";
    case ConstantId::SQRT3: return "SQRT3";
    case ConstantId::PI_COMMON: return "PI_COMMON";
    case ConstantId::PI_BRUINS: return "PI_BRUINS";
    case ConstantId::PI_FINE: return "PI_FINE";
  }
  return "UNKNOWN";
}

const std::vector<ConstantId>& all_constants() {
  static const std::vector<ConstantId> ids{ConstantId::SQRT2_COARSE, ConstantId::SQRT2_FINE,
                                           ConstantId::SQRT3,        ConstantId::PI_COMMON,
                                           ConstantId::PI_BRUINS,    ConstantId::PI_FINE};
  return ids;
}

BigInt isqrt(const BigInt& n) {
  if (n.sign() < 0) {
    throw Error(ErrorKind::NegativeInput, "integer square root of a negative number");
  }
  if (n < 2) return n;
  // Start above the root; Newton steps then decrease monotonically to floor(sqrt(n)).
  BigInt x = BigInt(1) << ((boost::multiprecision::msb(n) / 2) + 1);
  for (;;) {
    BigInt y = (x + n / x) / 2;
    if (y >= x) return x;
    x = std::move(y);
  }
}

std::optional<ExactNumber> sqrt_exact(const ExactNumber& x) {
  if (x.sign() < 0) {
    throw Error(ErrorKind::NegativeInput, "square root of a negative number");
  }
  const BigInt rn = isqrt(x.numerator());
  if (rn * rn != x.numerator()) return std::nullopt;
  const BigInt rd = isqrt(x.denominator());
  if (rd * rd != x.denominator()) return std::nullopt;
  return ExactNumber(rn, rd);
}

ExactNumber sqrt_heron(const ExactNumber& x, const ExactNumber& seed, int iterations) {
  if (x.sign() <= 0) throw Error(ErrorKind::DomainError, "Heron iteration needs x > 0");
  if (seed.sign() <= 0) throw Error(ErrorKind::DomainError, "Heron iteration needs seed > 0");
  if (iterations < 0) throw Error(ErrorKind::DomainError, "negative iteration count");
  const ExactNumber half = ExactNumber::fraction(1, 2);
  ExactNumber r = seed;
  for (int i = 0; i < iterations; ++i) {
    r = (r + x / r) * half;
  }
  return r;
}

ExactNumber heron_default_seed(const ExactNumber& x) {
  return (x + 1) * ExactNumber::fraction(1, 2);
}

ExactNumber sqrt_heron(const ExactNumber& x, int iterations) {
  return sqrt_heron(x, heron_default_seed(x), iterations);
}

ExactNumber squared_distance(const ExactNumber& x1, const ExactNumber& y1,
                             const ExactNumber& x2, const ExactNumber& y2) {
  return square(x2 - x1) + square(y2 - y1);
}

std::optional<ExactNumber> euclidean_distance(const ExactNumber& x1, const ExactNumber& y1,
                                              const ExactNumber& x2, const ExactNumber& y2) {
  return sqrt_exact(squared_distance(x1, y1, x2, y2));
}

std::vector<ExactNumber> incommensurable_chain(int n) {
  if (n < 1) throw Error(ErrorKind::DomainError, "chain length must be at least 1");
  std::vector<ExactNumber> chain;
  chain.reserve(static_cast<std::size_t>(n));
  chain.emplace_back(1);
  const ExactNumber unit_leg = 1;
  while (static_cast<int>(chain.size()) < n) {
    chain.push_back(chain.back() + square(unit_leg));
  }
  return chain;
}

}  // namespace sexa
