#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sexa/notation.hpp"
#include "test_util.hpp"

using sexa::ErrorKind;
using sexa::ExactNumber;
using sexa::NotationConfig;
using testutil::kind_of;
using testutil::q;

namespace {

ExactNumber from_oracle(const oracle::Frac& f) { return q(f.num, f.den); }

std::size_t error_offset(std::string_view text, const NotationConfig& cfg = {}) {
  try {
    sexa::parse(text, cfg);
  } catch (const sexa::Error& e) {
    return e.offset().value_or(999);
  }
  FAIL("expected a parse error");
  return 0;
}

}  // namespace

TEST_CASE("parse sexagesimal literals") {
  CHECK(sexa::parse("1;25") == q(17, 12));
  CHECK(sexa::parse("0") == ExactNumber(0));

  // Positional oracle: 2*60 + 36 + 15/60.
  const oracle::Frac expected = oracle::positional({2, 36}, {15});
  CHECK(expected == oracle::Frac(625, 4));
  CHECK(sexa::parse("2,36;15") == from_oracle(expected));

  CHECK(sexa::parse("0;0,45") == q(1, 80));
  CHECK(sexa::parse("9;10,2,46,40") == q(11881, 1296));
  CHECK(sexa::parse("1,33,27,30") == from_oracle(oracle::positional({1, 33, 27, 30}, {})));
  CHECK(sexa::parse("-0;30") == q(-1, 2));
  CHECK(sexa::parse("05;07") == sexa::parse("5;7"));
}

TEST_CASE("parse decimal input") {
  CHECK(sexa::parse("1.5") == q(3, 2));
  CHECK(sexa::parse("100") == ExactNumber(100));
  CHECK(sexa::parse("-0.125") == q(-1, 8));

  NotationConfig strict;
  strict.allow_decimal_input = false;
  CHECK(sexa::parse("45", strict) == ExactNumber(45));
  CHECK(kind_of([&] { sexa::parse("75", strict); }) == ErrorKind::MalformedDigit);
  CHECK(kind_of([&] { sexa::parse("1.5", strict); }) == ErrorKind::SyntaxError);
}

TEST_CASE("parse errors carry offsets") {
  CHECK(kind_of([] { sexa::parse("1,60"); }) == ErrorKind::MalformedDigit);
  CHECK(error_offset("1,60") == 2);
  CHECK(kind_of([] { sexa::parse("1,123;4"); }) == ErrorKind::MalformedDigit);
  CHECK(kind_of([] { sexa::parse("1,"); }) == ErrorKind::SyntaxError);
  CHECK(error_offset("1,") == 1);
  CHECK(kind_of([] { sexa::parse(",1"); }) == ErrorKind::SyntaxError);
  CHECK(error_offset(",1") == 0);
  CHECK(kind_of([] { sexa::parse("1,,2"); }) == ErrorKind::SyntaxError);
  CHECK(error_offset("1,,2") == 2);
  CHECK(kind_of([] { sexa::parse("1;2;3"); }) == ErrorKind::SyntaxError);
  CHECK(error_offset("1;2;3") == 3);
  CHECK(kind_of([] { sexa::parse(""); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { sexa::parse("-"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { sexa::parse("1;x"); }) == ErrorKind::SyntaxError);
}

TEST_CASE("custom notation") {
  NotationConfig cfg;
  cfg.digit_separator = '.';
  cfg.radix_mark = ':';
  CHECK(sexa::parse("2.36:15", cfg) == q(625, 4));
  CHECK(sexa::to_string(sexa::format(q(625, 4), 4, cfg), cfg) == "2.36:15");

  NotationConfig bad;
  bad.radix_mark = ',';
  CHECK(kind_of([&] { bad.validate(); }) == ErrorKind::InvalidParams);
  CHECK(kind_of([&] { sexa::parse("1", bad); }) == ErrorKind::InvalidParams);
}

TEST_CASE("format") {
  auto r = sexa::format(q(125, 4), 6);
  CHECK(r.exact);
  CHECK(sexa::to_string(r) == "31;15");

  r = sexa::format(1, 0);
  CHECK(r.exact);
  CHECK(sexa::to_string(r) == "1");

  r = sexa::format(q(1296, 11881), 4);
  CHECK_FALSE(r.exact);
  CHECK(sexa::to_string(r) == "0;6,32,41,39");
  CHECK(sexa::to_string(r) == oracle::render(oracle::long_divide(1296, 11881, 4)));

  CHECK(sexa::to_string(sexa::format(q(1, 80), 6)) == "0;0,45");
  CHECK(sexa::to_string(sexa::format(q(625, 4), 6)) == "2,36;15");
  CHECK(sexa::to_string(sexa::format(3600, 2)) == "1,0,0");
  CHECK(sexa::to_string(sexa::format(q(-7, 8), 6)) == "-0;52,30");
  CHECK(sexa::format(0, 3).int_digits == std::vector<int>{0});

  // Exact value that needs more places than allowed.
  r = sexa::format(q(1, 3600), 1);
  CHECK_FALSE(r.exact);
  CHECK(sexa::to_string(r) == "0;0");

  CHECK(kind_of([] { sexa::format(1, -1); }) == ErrorKind::DomainError);
}

TEST_CASE("format truncates by default and rounds on request") {
  // 37152/11881 = 3;7,37,14,3,15,44,... by long division.
  const auto oracle_digits = oracle::long_divide(37152, 11881, 4);
  CHECK(oracle::render(oracle_digits) == "3;7,37,14,3");
  CHECK(sexa::to_string(sexa::format(q(37152, 11881), 4)) == "3;7,37,14,3");
  CHECK(sexa::to_string(sexa::format(q(37152, 11881), 3)) == "3;7,37,14");
  CHECK(sexa::to_string(sexa::format(q(37152, 11881), 2)) ==
        oracle::render(oracle::long_divide(37152, 11881, 2)));

  NotationConfig nearest;
  nearest.rounding = sexa::RoundingMode::nearest;
  // 0;0,59,59,59,... rounds up with a carry into the integer part.
  const ExactNumber almost_one = 1 - q(1, 60 * 60 * 60 * 60);
  CHECK(sexa::to_string(sexa::format(almost_one, 2, nearest)) == "1;0,0");
  CHECK(sexa::to_string(sexa::format(almost_one, 2)) == "0;59,59");
  // 1/7 = 0;8,34,17,8,34,17,8,... rounds the sixth place 17 -> 17.
  CHECK(sexa::to_string(sexa::format(q(1, 7), 6, nearest)) == "0;8,34,17,8,34,17");
  CHECK(sexa::to_string(sexa::format(q(1, 7), 2, nearest)) == "0;8,34");
  CHECK(sexa::to_string(sexa::format(q(1, 7), 1, nearest)) == "0;9");
}

TEST_CASE("show marks cut-short expansions") {
  CHECK(sexa::show(q(1, 5)) == "0;12");
  CHECK(sexa::show(q(1, 7), 3) == "0;8,34,17...");
}

TEST_CASE("reciprocal_digits") {
  auto r = sexa::reciprocal_digits(q(11881, 1296), 4);
  CHECK(sexa::to_string(r) == "0;6,32,41,39");
  CHECK_FALSE(r.exact);

  r = sexa::reciprocal_digits(2, 1);
  CHECK(sexa::to_string(r) == "0;30");
  CHECK(r.exact);

  const auto long_div = oracle::long_divide(1, 7, 6);
  CHECK(oracle::render(long_div) == "0;8,34,17,8,34,17");
  r = sexa::reciprocal_digits(7, 6);
  CHECK(sexa::to_string(r) == oracle::render(long_div));
  CHECK_FALSE(r.exact);

  CHECK(kind_of([] { sexa::reciprocal_digits(0, 3); }) == ErrorKind::ZeroInput);
  CHECK(kind_of([] { sexa::reciprocal_digits(3, 0); }) == ErrorKind::DomainError);
}

TEST_CASE("property: format/parse round trip") {
  std::mt19937_64 rng(60);
  std::uniform_int_distribution<std::int64_t> num(-2000000000, 2000000000);
  std::uniform_int_distribution<int> e2(0, 16), e3(0, 8), e5(0, 8);
  for (int i = 0; i < 2000; ++i) {
    std::int64_t den = 1;
    for (int k = e2(rng); k > 0; --k) den *= 2;
    for (int k = e3(rng); k > 0; --k) den *= 3;
    for (int k = e5(rng); k > 0; --k) den *= 5;
    const ExactNumber x(sexa::BigInt(num(rng)), sexa::BigInt(den));
    const auto digits = sexa::format(x, 8);
    REQUIRE(digits.exact);
    REQUIRE(digits.value() == x);
    REQUIRE(sexa::parse(sexa::to_string(digits)) == x);
  }
}

TEST_CASE("property: truncation brackets the value") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<std::int64_t> num(1, 10000000);
  std::uniform_int_distribution<std::int64_t> den(1, 100000);
  std::uniform_int_distribution<int> places(0, 7);
  for (int i = 0; i < 2000; ++i) {
    const ExactNumber x = q(num(rng), den(rng));
    const int k = places(rng);
    const ExactNumber shown = sexa::format(x, k).value();
    ExactNumber ulp = 1;
    for (int j = 0; j < k; ++j) ulp /= 60;
    REQUIRE(shown <= x);
    REQUIRE(x < shown + ulp);
  }
}

TEST_CASE("property: regular iff the reciprocal terminates") {
  std::mt19937_64 rng(62);
  std::uniform_int_distribution<std::int64_t> small(1, 999999);
  // Bias half the draws toward 5-smooth values so both outcomes are exercised.
  const std::int64_t smooth[] = {1, 2, 3, 4, 5, 8, 9, 12, 16, 25, 27, 45, 64, 80, 81, 125, 243, 720, 3600, 15625};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(smooth) - 1);
  for (int i = 0; i < 1000; ++i) {
    const std::int64_t n = i % 2 ? smooth[pick(rng)] * (1 + (i % 3 == 0 ? 7 : 0)) : small(rng);
    const std::int64_t d = i % 2 ? smooth[pick(rng)] : small(rng);
    const ExactNumber x = q(n, d);
    const bool terminates = sexa::format(sexa::reciprocal_exact(x), 20).exact &&
                            sexa::format(x, 20).exact;
    REQUIRE(sexa::is_regular(x) == terminates);
  }
}
