#include "doctest.h"

#include "tt/integrality.hpp"
#include "tt/lengths.hpp"

using namespace tt;

namespace {

// Surd-engine view of the same fourteen lengths, used as an independent oracle.
constexpr std::array<std::string_view, 14> kSurdField{
    "t1t2", "x1", "x2", "a1", "a2", "h1", "h2", "m1m", "m2m", "im", "c2k", "t2k", "c1k", "t1k"};

bool surd_engine_all_integral(const PythTriple& t, const Integer& delta) {
  const LengthSet ls = compute_lengths({Rational(delta * t.r1 * t.r1), Rational(delta * t.r2 * t.r2)});
  for (auto name : kSurdField) {
    const Surd& s = ls.at(name);
    if (!s.is_rational() || !is_integer(s.coef())) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("classify ladder") {
  CHECK(classify(3, 2).tier == Tier::NonSquareProduct);
  CHECK_FALSE(classify(3, 2).delta.has_value());

  const auto tangent = classify(4, 1);
  CHECK(tangent.tier == Tier::TangentIntegral);
  CHECK(*tangent.delta == 1);
  CHECK(*tangent.r1 == 2);
  CHECK(*tangent.r2 == 1);
  CHECK_FALSE(tangent.r3.has_value());
  CHECK_FALSE(tangent.rational_lengths.has_value());

  const auto cevian = classify(16, 9);
  CHECK(cevian.tier == Tier::CevianIntegral);
  CHECK(*cevian.delta == 1);
  CHECK(*cevian.r3 == 5);
  CHECK(cevian.rational_lengths->at("a1") == Rational(96, 5));
  CHECK_FALSE(cevian.t.has_value());

  const auto full = classify(560, 315);
  CHECK(full.tier == Tier::FullyIntegral);
  CHECK(*full.delta == 35);
  CHECK(*full.r1 == 4);
  CHECK(*full.r2 == 3);
  CHECK(*full.r3 == 5);
  CHECK(*full.t == 1);
}

TEST_CASE("classify errors") {
  auto kind = [](long a, long b) {
    try {
      classify(a, b);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::VerificationFailure;
  };
  CHECK(kind(3, 5) == ErrorKind::InvalidRadii);
  CHECK(kind(5, 5) == ErrorKind::InvalidRadii);
  CHECK(kind(5, 0) == ErrorKind::InvalidInput);
  CHECK(kind(-1, -2) == ErrorKind::InvalidInput);
}

TEST_CASE("rational_lengths") {
  const auto golden = rational_lengths(35, {4, 3, 5});
  const std::array<long, 14> expected{840, 700, 525, 672, 504, 448, 189, 252, 336, 420, 1125, 1080, 2000, 1920};
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(golden.values[i] == expected[i]);

  const auto unit = rational_lengths(1, {4, 3, 5});
  CHECK(unit.at("h1") == Rational(64, 5));
  CHECK(unit.at("C2K") == Rational(225, 7));

  const auto five = rational_lengths(5, {4, 3, 5});
  CHECK(five.at("h1") == 64);
  CHECK(five.at("a1") == 96);
  CHECK(five.at("C2K") == Rational(1125, 7));

  CHECK_THROWS_AS(rational_lengths(1, {8, 6, 10}), Error);
  CHECK_THROWS_AS(rational_lengths(1, {3, 4, 5}), Error);
}

TEST_CASE("necessity_check") {
  CHECK(necessity_check({4, 3, 5}, 35));
  CHECK_FALSE(necessity_check({4, 3, 5}, 5));
  CHECK(necessity_check({4, 3, 5}, 70));
}

TEST_CASE("property: rational lengths match the surd engine") {
  for (const auto& t : enumerate_primitive_triples(65)) {
    for (long delta = 1; delta <= 12; ++delta) {
      const auto lengths = rational_lengths(delta, t);
      const LengthSet ls = compute_lengths({Rational(delta * t.r1 * t.r1), Rational(delta * t.r2 * t.r2)});
      for (std::size_t i = 0; i < kSurdField.size(); ++i) {
        REQUIRE(ls.at(kSurdField[i]) == Surd::from_rational(lengths.values[i]));
      }
    }
  }
}

TEST_CASE("property: necessity_check agrees with divisibility and with the surd engine") {
  for (const auto& t : enumerate_primitive_triples(29)) {
    const Integer modulus = t.r3 * (t.r1 * t.r1 - t.r2 * t.r2);
    for (Integer delta = 1; delta <= 3 * modulus; ++delta) {
      const bool divisible = mpz_divisible_p(delta.get_mpz_t(), modulus.get_mpz_t()) != 0;
      REQUIRE(necessity_check(t, delta) == divisible);
      if (delta <= 400 || divisible) REQUIRE(surd_engine_all_integral(t, delta) == divisible);
    }
  }
}

TEST_CASE("property: classify reproduces its inputs") {
  for (long R1 = 2; R1 <= 300; ++R1) {
    for (long R2 = 1; R2 < R1; ++R2) {
      const auto report = classify(R1, R2);
      REQUIRE((report.tier == Tier::NonSquareProduct) == !is_perfect_square(Integer(R1 * R2)));
      if (report.tier == Tier::NonSquareProduct) continue;
      REQUIRE(*report.delta * *report.r1 * *report.r1 == R1);
      REQUIRE(*report.delta * *report.r2 * *report.r2 == R2);
      if (report.tier >= Tier::CevianIntegral) {
        const auto ls = compute_lengths({R1, R2});
        REQUIRE(ls.x1 == Surd(*report.delta * *report.r1 * *report.r3, 1));
        REQUIRE(ls.x2 == Surd(*report.delta * *report.r2 * *report.r3, 1));
      }
      if (report.tier == Tier::FullyIntegral) {
        REQUIRE(*report.delta == *report.t * *report.r3 * (*report.r1 * *report.r1 - *report.r2 * *report.r2));
      }
    }
  }
}
