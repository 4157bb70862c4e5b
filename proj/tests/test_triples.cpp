#include <numeric>
#include <set>
#include <tuple>

#include "doctest.h"

#include "tt/triples.hpp"

using namespace tt;

namespace {

// Brute-force oracle over all legs, independent of the (m, n) formula.
std::vector<PythTriple> brute_triples(long max_c) {
  std::vector<PythTriple> out;
  for (long c = 1; c <= max_c; ++c) {
    for (long a = 1; a < c; ++a) {
      for (long b = 1; b < a; ++b) {
        if (a * a + b * b == c * c && std::gcd(a, b) == 1) out.push_back({a, b, c});
      }
    }
  }
  return out;  // already sorted by (c, a)
}

}  // namespace

TEST_CASE("triple_from_params") {
  CHECK(triple_from_params({2, 1}) == PythTriple{4, 3, 5});
  CHECK(triple_from_params({3, 2}) == PythTriple{12, 5, 13});
  CHECK(triple_from_params({4, 1}) == PythTriple{15, 8, 17});
  CHECK(15 * 15 + 8 * 8 == 17 * 17);
  for (auto bad : {TripleParams{2, 2}, TripleParams{3, 1}, TripleParams{4, 2}, TripleParams{1, 2},
                   TripleParams{1, 0}}) {
    CHECK_THROWS_AS(triple_from_params(bad), Error);
  }
  try {
    triple_from_params({3, 1});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidParams);
  }
}

TEST_CASE("property: generated triples satisfy the primitive invariants") {
  for (long m = 2; m <= 40; ++m) {
    for (long n = 1; n < m; ++n) {
      const TripleParams p{m, n};
      if (!is_valid(p)) continue;
      const auto t = triple_from_params(p);
      REQUIRE(is_primitive_triple(t));
      REQUIRE(t.r1 > t.r2);
      REQUIRE(mpz_odd_p(t.r3.get_mpz_t()));
      REQUIRE(mpz_odd_p(Integer(t.r1 + t.r2).get_mpz_t()));
      REQUIRE(mpz_odd_p(Integer(t.r1 * t.r1 - t.r2 * t.r2).get_mpz_t()));
      const auto back = params_from_triple(t);
      REQUIRE(back.m == m);
      REQUIRE(back.n == n);
    }
  }
}

TEST_CASE("enumerate_primitive_triples") {
  CHECK(enumerate_primitive_triples(4).empty());
  CHECK(enumerate_primitive_triples(5) == std::vector<PythTriple>{{4, 3, 5}});
  CHECK(enumerate_primitive_triples(13) == std::vector<PythTriple>{{4, 3, 5}, {12, 5, 13}});
  CHECK(enumerate_primitive_triples(200) == brute_triples(200));
}

TEST_CASE("square_product_decompose") {
  CHECK(square_product_decompose(560, 315) == SquareProduct{35, 4, 3});
  for (long k = 1; k <= 50; ++k) CHECK(square_product_decompose(k, k) == SquareProduct{k, 1, 1});
  CHECK_FALSE(square_product_decompose(3, 2).has_value());
  CHECK_THROWS_AS(square_product_decompose(0, 2), Error);
  CHECK_THROWS_AS(square_product_decompose(2, -1), Error);
}

TEST_CASE("property: square_product_decompose present iff a*b is a square") {
  for (long a = 1; a <= 200; ++a) {
    for (long b = 1; b <= 200; ++b) {
      const auto d = square_product_decompose(a, b);
      REQUIRE(d.has_value() == is_perfect_square(Integer(a * b)));
      if (d) {
        REQUIRE(d->delta * d->r1 * d->r1 == a);
        REQUIRE(d->delta * d->r2 * d->r2 == b);
        REQUIRE(d->delta * d->r1 * d->r2 == integer_sqrt(a * b));
        REQUIRE(std::gcd(d->r1.get_si(), d->r2.get_si()) == 1);
      }
    }
  }
}

TEST_CASE("property: decomposition round trip over generated triples") {
  for (const auto& t : enumerate_primitive_triples(300)) {
    for (long delta = 1; delta <= 20; ++delta) {
      const auto d = square_product_decompose(delta * t.r1 * t.r1, delta * t.r2 * t.r2);
      REQUIRE(d.has_value());
      REQUIRE(*d == SquareProduct{delta, t.r1, t.r2});
    }
  }
}

TEST_CASE("verify_coprimeness") {
  auto all_true = [](const PythTriple& t) {
    for (const auto& check : verify_coprimeness(t)) {
      if (!check.holds) return false;
    }
    return true;
  };
  CHECK(std::gcd(5, 96) == 1);
  CHECK(std::gcd(7, 384) == 1);
  CHECK(all_true({4, 3, 5}));
  CHECK(all_true({12, 5, 13}));
  // a non-primitive triple breaks at least one condition
  CHECK_FALSE(all_true({8, 6, 10}));

  std::set<std::string_view> names;
  for (const auto& check : verify_coprimeness({4, 3, 5})) names.insert(check.formula);
  CHECK(names.size() == 10);

  for (const auto& t : enumerate_primitive_triples(1000)) REQUIRE(all_true(t));
}
