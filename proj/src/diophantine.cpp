#include "tt/diophantine.hpp"

#include <numeric>

namespace tt {

std::string_view to_string(Quartic equation) {
  return equation == Quartic::Plus14 ? "plus14" : "minus";
}

Integer quartic_value(Quartic equation, const Integer& x, const Integer& y) {
  const Integer x2 = x * x;
  const Integer y2 = y * y;
  const int mixed = equation == Quartic::Plus14 ? 14 : -1;
  return x2 * x2 + mixed * x2 * y2 + y2 * y2;
}

namespace {

std::vector<QuarticHit> scan(Quartic equation, std::uint64_t bound, bool opposite_parity_only) {
  std::vector<QuarticHit> hits;
  const long mixed = equation == Quartic::Plus14 ? 14 : -1;
  Integer value;
  Integer root;
  for (std::uint64_t x = 1; x <= bound; ++x) {
    const Integer x2 = Integer(static_cast<unsigned long>(x)) * static_cast<unsigned long>(x);
    const Integer x4 = x2 * x2;
    const Integer mixed_x2 = mixed * x2;
    for (std::uint64_t y = 1; y <= bound; ++y) {
      if (opposite_parity_only && (x + y) % 2 == 0) continue;
      if (std::gcd(x, y) != 1) continue;
      const Integer y2 = Integer(static_cast<unsigned long>(y)) * static_cast<unsigned long>(y);
      value = x4 + mixed_x2 * y2 + y2 * y2;
      mpz_sqrt(root.get_mpz_t(), value.get_mpz_t());
      if (root * root == value) {
        hits.push_back({Integer(static_cast<unsigned long>(x)), Integer(static_cast<unsigned long>(y)), root,
                        equation});
      }
    }
  }
  return hits;
}

}  // namespace

std::vector<QuarticHit> search_plus14(std::uint64_t bound, bool opposite_parity_only) {
  return scan(Quartic::Plus14, bound, opposite_parity_only);
}

std::vector<QuarticHit> search_minus_mixed(std::uint64_t bound) {
  return scan(Quartic::MinusMixed, bound, false);
}

IrrationalityCertificate certify_irrational(const PythTriple& triple) {
  IrrationalityCertificate cert;
  cert.d1_radicand_raw = triple.r1 * triple.r1 + 4 * triple.r2 * triple.r2;
  cert.d2_radicand_raw = 4 * triple.r1 * triple.r1 + triple.r2 * triple.r2;
  cert.d1_irrational = !is_perfect_square(cert.d1_radicand_raw);
  cert.d2_irrational = !is_perfect_square(cert.d2_radicand_raw);
  return cert;
}

}  // namespace tt
