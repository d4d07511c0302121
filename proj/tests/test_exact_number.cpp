#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "test_util.hpp"
#include "sexa/error.hpp"
#include "sexa/exact_number.hpp"

using sexa::BigInt;
using sexa::BinaryOp;
using sexa::Comparison;
using sexa::ErrorKind;
using sexa::ExactNumber;

namespace {

using testutil::kind_of;
using testutil::q;

ExactNumber random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num(-100000, 100000);
  std::uniform_int_distribution<std::int64_t> den(1, 5000);
  return q(num(rng), den(rng));
}

}  // namespace

TEST_CASE("canonical form") {
  const ExactNumber x(BigInt(-10), BigInt(-4));
  CHECK(x.signed_numerator() == 5);
  CHECK(x.denominator() == 2);
  CHECK(x.sign() == 1);

  const ExactNumber neg(BigInt(3), BigInt(-6));
  CHECK(neg.sign() == -1);
  CHECK(neg.numerator() == 1);
  CHECK(neg.denominator() == 2);

  const ExactNumber zero(BigInt(0), BigInt(-7));
  CHECK(zero.sign() == 0);
  CHECK(zero.denominator() == 1);
  CHECK(zero == ExactNumber(0));

  CHECK(kind_of([] { ExactNumber(BigInt(1), BigInt(0)); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("binop follows the tablet arithmetic") {
  // 1 + 0;33,45 = 1;33,45 = 25/16
  CHECK(binop(BinaryOp::add, 1, q(9, 16)) == q(25, 16));
  // 0;48 * 40 = 32
  CHECK(binop(BinaryOp::mul, q(4, 5), 40) == ExactNumber(32));
  CHECK(binop(BinaryOp::sub, q(7, 3), q(7, 3)) == ExactNumber(0));
}

TEST_CASE("square") {
  CHECK(sexa::square(q(25, 2)) == q(625, 4));
  CHECK(sexa::square(q(3, 4)) == q(9, 16));
  CHECK(sexa::square(0) == ExactNumber(0));
  CHECK(sexa::square(q(-3, 4)) == binop(BinaryOp::mul, q(-3, 4), q(-3, 4)));
}

TEST_CASE("reciprocal_exact") {
  CHECK(sexa::reciprocal_exact(5) == q(1, 5));
  CHECK(sexa::reciprocal_exact(q(5, 4)) == q(4, 5));
  CHECK(sexa::reciprocal_exact(80) == q(1, 80));
  CHECK(sexa::reciprocal_exact(q(-2, 3)) == q(-3, 2));
  CHECK(kind_of([] { sexa::reciprocal_exact(0); }) == ErrorKind::ZeroInput);
}

TEST_CASE("divide") {
  CHECK(sexa::divide(2500, 80) == q(125, 4));
  CHECK(sexa::divide(q(86, 3), q(11881, 1296)) == q(37152, 11881));
  CHECK(kind_of([] { sexa::divide(1, 0); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("compare") {
  CHECK(sexa::compare(q(17, 12), q(3, 2)) == Comparison::LT);
  CHECK(sexa::compare(q(24, 25), q(24, 25)) == Comparison::EQ);
  // Cross-multiplication oracle: 24*25 > 7*25.
  CHECK(24 * 25 > 7 * 25);
  CHECK(sexa::compare(q(24, 25), q(7, 25)) == Comparison::GT);
  CHECK(sexa::compare(q(-1, 2), q(-1, 3)) == Comparison::LT);
}

TEST_CASE("is_regular") {
  CHECK(sexa::is_regular(80));
  CHECK_FALSE(sexa::is_regular(7));
  CHECK(sexa::is_regular(1));
  CHECK(sexa::is_regular(q(5, 4)));
  CHECK(sexa::is_regular(q(-81, 1000)));
  CHECK_FALSE(sexa::is_regular(q(1, 14)));
  CHECK(kind_of([] { sexa::is_regular(0); }) == ErrorKind::ZeroInput);

  // 1/7 never terminates by long division; 1/80 does.
  CHECK_FALSE(oracle::long_divide(1, 7, 30).terminated);
  CHECK(oracle::long_divide(1, 80, 30).terminated);
}

TEST_CASE("ring laws on random rationals") {
  std::mt19937_64 rng(20260101);
  for (int i = 0; i < 2000; ++i) {
    const ExactNumber a = random_rational(rng);
    const ExactNumber b = random_rational(rng);
    const ExactNumber c = random_rational(rng);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a - a == ExactNumber(0));
    if (!a.is_zero()) {
      REQUIRE(sexa::reciprocal_exact(a) * a == ExactNumber(1));
      REQUIRE(a / a == ExactNumber(1));
    }
  }
}

TEST_CASE("total order matches the int64 oracle") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
  std::uniform_int_distribution<std::int64_t> den(1, 1000);
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t an = num(rng), ad = den(rng), bn = num(rng), bd = den(rng);
    const std::int64_t lhs = an * bd, rhs = bn * ad;
    const Comparison expected = lhs < rhs ? Comparison::LT : lhs > rhs ? Comparison::GT : Comparison::EQ;
    REQUIRE(sexa::compare(q(an, ad), q(bn, bd)) == expected);
  }
}
