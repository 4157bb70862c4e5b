#include "tt/integrality.hpp"

namespace tt {

std::string_view to_string(Tier tier) {
  switch (tier) {
    case Tier::NonSquareProduct: return "NonSquareProduct";
    case Tier::TangentIntegral: return "TangentIntegral";
    case Tier::CevianIntegral: return "CevianIntegral";
    case Tier::FullyIntegral: return "FullyIntegral";
  }
  return "unknown";
}

Tier parse_tier(std::string_view text) {
  for (Tier tier : {Tier::NonSquareProduct, Tier::TangentIntegral, Tier::CevianIntegral, Tier::FullyIntegral}) {
    if (to_string(tier) == text) return tier;
  }
  throw Error(ErrorKind::InvalidInput, "unknown tier '" + std::string(text) + "'");
}

IntegralityReport classify(const Integer& R1, const Integer& R2) {
  if (R1 < 1 || R2 < 1) throw Error(ErrorKind::InvalidInput, "radii must be positive integers");
  if (R1 <= R2) throw Error(ErrorKind::InvalidRadii, "require R1 > R2");

  IntegralityReport report;
  auto decomposition = square_product_decompose(R1, R2);
  if (!decomposition) return report;

  report.tier = Tier::TangentIntegral;
  report.delta = decomposition->delta;
  report.r1 = decomposition->r1;
  report.r2 = decomposition->r2;

  const Integer hyp_sq = decomposition->r1 * decomposition->r1 + decomposition->r2 * decomposition->r2;
  if (!is_perfect_square(hyp_sq)) return report;

  const PythTriple triple{decomposition->r1, decomposition->r2, integer_sqrt(hyp_sq)};
  report.tier = Tier::CevianIntegral;
  report.r3 = triple.r3;
  report.rational_lengths = rational_lengths(decomposition->delta, triple);

  const Integer modulus = triple.r3 * (triple.r1 * triple.r1 - triple.r2 * triple.r2);
  if (mpz_divisible_p(decomposition->delta.get_mpz_t(), modulus.get_mpz_t())) {
    report.tier = Tier::FullyIntegral;
    report.t = Integer(decomposition->delta / modulus);
  }
  return report;
}

LengthFractions length_fractions(const PythTriple& triple) {
  if (!is_primitive_triple(triple)) {
    throw Error(ErrorKind::InvalidTriple, "not a primitive triple with r1 > r2");
  }
  const Integer& r1 = triple.r1;
  const Integer& r2 = triple.r2;
  const Integer& r3 = triple.r3;
  const Integer diff = r1 * r1 - r2 * r2;

  LengthFractions out;
  out.at("T1T2") = {2 * r1 * r2, 1};
  out.at("x1") = {r1 * r3, 1};
  out.at("x2") = {r2 * r3, 1};
  out.at("a1") = {2 * r2 * r1 * r1, r3};
  out.at("a2") = {2 * r1 * r2 * r2, r3};
  out.at("h1") = {r1 * r1 * r1, r3};
  out.at("h2") = {r2 * r2 * r2, r3};
  out.at("x1mh1") = {r1 * r2 * r2, r3};
  out.at("x2mh2") = {r2 * r1 * r1, r3};
  out.at("IM") = {r1 * r2, 1};
  out.at("C2K") = {r2 * r2 * r3 * r3, diff};
  out.at("T2K") = {2 * r2 * r2 * r2 * r1, diff};
  out.at("C1K") = {r1 * r1 * r3 * r3, diff};
  out.at("T1K") = {2 * r1 * r1 * r1 * r2, diff};
  return out;
}

bool all_integral(const LengthFractions& fractions, const Integer& delta) {
  Integer product;
  for (const auto& f : fractions.values) {
    product = delta * f.numerator;
    if (!mpz_divisible_p(product.get_mpz_t(), f.denominator.get_mpz_t())) return false;
  }
  return true;
}

RationalLengths rational_lengths(const Integer& delta, const PythTriple& triple) {
  if (delta < 1) throw Error(ErrorKind::InvalidInput, "delta must be positive");
  const LengthFractions fractions = length_fractions(triple);
  RationalLengths out;
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    out.values[i] = make_rational(delta * fractions.values[i].numerator, fractions.values[i].denominator);
  }
  return out;
}

bool necessity_check(const PythTriple& triple, const Integer& delta) {
  if (delta < 1) throw Error(ErrorKind::InvalidInput, "delta must be positive");
  return all_integral(length_fractions(triple), delta);
}

}  // namespace tt
