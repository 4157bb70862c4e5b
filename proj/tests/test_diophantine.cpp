#include <numeric>

#include "doctest.h"

#include "tt/diophantine.hpp"

using namespace tt;

namespace {

// Oracle: walk z upward instead of taking square roots.
std::vector<std::array<long, 3>> brute_hits(long bound, long mixed, bool opposite_parity_only) {
  std::vector<std::array<long, 3>> out;
  for (long x = 1; x <= bound; ++x) {
    for (long y = 1; y <= bound; ++y) {
      if (std::gcd(x, y) != 1) continue;
      if (opposite_parity_only && (x + y) % 2 == 0) continue;
      const long value = x * x * x * x + mixed * x * x * y * y + y * y * y * y;
      long z = 0;
      while (z * z < value) ++z;
      if (z * z == value) out.push_back({x, y, z});
    }
  }
  return out;
}

std::vector<std::array<long, 3>> as_arrays(const std::vector<QuarticHit>& hits) {
  std::vector<std::array<long, 3>> out;
  for (const auto& h : hits) out.push_back({h.x.get_si(), h.y.get_si(), h.z.get_si()});
  return out;
}

}  // namespace

TEST_CASE("search_plus14") {
  CHECK(search_plus14(1).empty());
  CHECK(search_plus14(50).empty());
  CHECK(as_arrays(search_plus14(50)) == brute_hits(50, 14, true));
  // both-odd solutions exist once the parity filter is lifted: 1 + 14 + 1 = 16
  const auto unfiltered = search_plus14(50, false);
  REQUIRE_FALSE(unfiltered.empty());
  CHECK(unfiltered.front() == QuarticHit{1, 1, 4, Quartic::Plus14});
  CHECK(as_arrays(unfiltered) == brute_hits(50, 14, false));
  for (const auto& h : unfiltered) {
    CHECK(mpz_odd_p(h.x.get_mpz_t()));
    CHECK(mpz_odd_p(h.y.get_mpz_t()));
  }
}

TEST_CASE("search_minus_mixed") {
  const std::vector<QuarticHit> unique{{1, 1, 1, Quartic::MinusMixed}};
  CHECK(search_minus_mixed(1) == unique);
  CHECK(search_minus_mixed(50) == unique);
  CHECK(as_arrays(search_minus_mixed(50)) == brute_hits(50, -1, false));
}

TEST_CASE("quartic_value") {
  CHECK(quartic_value(Quartic::Plus14, 2, 1) == 16 + 56 + 1);
  CHECK(quartic_value(Quartic::MinusMixed, 2, 1) == 16 - 4 + 1);
}

TEST_CASE("certify_irrational") {
  const auto golden = certify_irrational({4, 3, 5});
  CHECK(golden.d1_radicand_raw == 52);
  CHECK(golden.d2_radicand_raw == 73);
  CHECK(golden.d1_irrational);
  CHECK(golden.d2_irrational);
  CHECK(280 * 280 * 13 == 560 * 560 + 840 * 840);

  const auto next = certify_irrational({12, 5, 13});
  CHECK(next.d1_radicand_raw == 244);
  CHECK(next.d2_radicand_raw == 601);
  CHECK(next.d1_irrational);
  CHECK(next.d2_irrational);

  // contract case: a leg pair with a square radicand (3^2 + 4*2^2 = 25)
  const auto square = certify_irrational({3, 2, 0});
  CHECK_FALSE(square.d1_irrational);
  CHECK(square.d2_irrational);
}

TEST_CASE("property: primitive triples have irrational diagonals") {
  for (const auto& t : enumerate_primitive_triples(500)) {
    const auto cert = certify_irrational(t);
    REQUIRE(cert.d1_irrational);
    REQUIRE(cert.d2_irrational);
    // independent of delta: d1^2 = delta^2 r1^2 (r1^2 + 4 r2^2)
    for (long delta : {1L, 35L, 1001L}) {
      const Integer d1_sq = delta * delta * t.r1 * t.r1 * cert.d1_radicand_raw;
      REQUIRE(is_perfect_square(d1_sq) == !cert.d1_irrational);
    }
  }
}

TEST_CASE("property: parity split of r1^2 + 4 r2^2") {
  for (long m = 2; m <= 50; ++m) {
    for (long n = 1; n < m; ++n) {
      const TripleParams p{m, n};
      if (!is_valid(p)) continue;
      const PythTriple t = triple_from_params(p);
      const auto cert = certify_irrational(t);
      if (mpz_odd_p(t.r1.get_mpz_t())) {
        REQUIRE(cert.d1_radicand_raw == quartic_value(Quartic::Plus14, m, n));
      } else {
        REQUIRE(cert.d1_radicand_raw == 4 * quartic_value(Quartic::MinusMixed, m, n));
      }
    }
  }
}
