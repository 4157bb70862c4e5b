#include "tt/triples.hpp"

#include <algorithm>

namespace tt {

namespace {

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

bool is_odd(const Integer& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }

}  // namespace

bool is_valid(const TripleParams& p) {
  return p.n >= 1 && p.m > p.n && gcd(p.m, p.n) == 1 && is_odd(p.m + p.n);
}

bool is_primitive_triple(const PythTriple& t) {
  return t.r2 >= 1 && t.r1 > t.r2 && t.r1 * t.r1 + t.r2 * t.r2 == t.r3 * t.r3 &&
         gcd(t.r1, t.r2) == 1;
}

PythTriple triple_from_params(const TripleParams& p) {
  if (!is_valid(p)) {
    throw Error(ErrorKind::InvalidParams, "m and n must be coprime with opposite parity and m > n >= 1");
  }
  Integer odd_leg = p.m * p.m - p.n * p.n;
  Integer even_leg = 2 * p.m * p.n;
  Integer r3 = p.m * p.m + p.n * p.n;
  if (odd_leg > even_leg) return {odd_leg, even_leg, r3};
  return {even_leg, odd_leg, r3};
}

TripleParams params_from_triple(const PythTriple& t) {
  if (!is_primitive_triple(t)) throw Error(ErrorKind::InvalidTriple, "not a primitive triple with r1 > r2");
  const Integer& odd_leg = is_odd(t.r1) ? t.r1 : t.r2;
  // r3 + (m^2 - n^2) = 2m^2, r3 - (m^2 - n^2) = 2n^2
  return {integer_sqrt((t.r3 + odd_leg) / 2), integer_sqrt((t.r3 - odd_leg) / 2)};
}

std::vector<PythTriple> enumerate_primitive_triples(const Integer& max_r3) {
  std::vector<PythTriple> out;
  for (Integer m = 2; m * m + 1 <= max_r3; ++m) {
    for (Integer n = 1; n < m; ++n) {
      TripleParams p{m, n};
      if (!is_valid(p)) continue;
      if (m * m + n * n > max_r3) break;
      out.push_back(triple_from_params(p));
    }
  }
  std::sort(out.begin(), out.end(), [](const PythTriple& a, const PythTriple& b) {
    return a.r3 != b.r3 ? a.r3 < b.r3 : a.r1 < b.r1;
  });
  return out;
}

std::optional<SquareProduct> square_product_decompose(const Integer& a, const Integer& b) {
  if (a < 1 || b < 1) throw Error(ErrorKind::InvalidInput, "square_product_decompose needs positive integers");
  Integer delta = gcd(a, b);
  Integer ca = a / delta;
  Integer cb = b / delta;
  if (!is_perfect_square(ca) || !is_perfect_square(cb)) return std::nullopt;
  return SquareProduct{delta, integer_sqrt(ca), integer_sqrt(cb)};
}

std::array<CoprimenessCheck, 10> verify_coprimeness(const PythTriple& t) {
  const Integer& r1 = t.r1;
  const Integer& r2 = t.r2;
  const Integer& r3 = t.r3;
  const Integer diff = r1 * r1 - r2 * r2;
  auto coprime = [](const Integer& a, const Integer& b) { return gcd(a, b) == 1; };
  return {{
      {"a1", "gcd(r3, 2*r2*r1^2) = 1", coprime(r3, 2 * r2 * r1 * r1)},
      {"a2", "gcd(r3, 2*r1*r2^2) = 1", coprime(r3, 2 * r1 * r2 * r2)},
      {"h1", "gcd(r3, r1^3) = 1", coprime(r3, r1 * r1 * r1)},
      {"h2", "gcd(r3, r2^3) = 1", coprime(r3, r2 * r2 * r2)},
      {"x1mh1", "gcd(r3, r1*r2^2) = 1", coprime(r3, r1 * r2 * r2)},
      {"x2mh2", "gcd(r3, r2*r1^2) = 1", coprime(r3, r2 * r1 * r1)},
      {"C2K", "gcd(r1^2 - r2^2, r2^2*r3^2) = 1", coprime(diff, r2 * r2 * r3 * r3)},
      {"T2K", "gcd(r1^2 - r2^2, 2*r2^3*r1) = 1", coprime(diff, 2 * r2 * r2 * r2 * r1)},
      {"C1K", "gcd(r1^2 - r2^2, r1^2*r3^2) = 1", coprime(diff, r1 * r1 * r3 * r3)},
      {"T1K", "gcd(r1^2 - r2^2, 2*r1^3*r2) = 1", coprime(diff, 2 * r1 * r1 * r1 * r2)},
  }};
}

}  // namespace tt
