#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "tt/exact_arith.hpp"

namespace tt {

// Generator pair of a primitive triple: m > n >= 1, gcd(m, n) = 1, m + n odd.
struct TripleParams {
  Integer m;
  Integer n;
};

bool is_valid(const TripleParams& p);

// Primitive triple ordered so that r1 > r2 (the larger leg pairs with the
// larger radius).
struct PythTriple {
  Integer r1;
  Integer r2;
  Integer r3;

  friend bool operator==(const PythTriple&, const PythTriple&) = default;
};

bool is_primitive_triple(const PythTriple& t);

PythTriple triple_from_params(const TripleParams& p);

// Inverse of triple_from_params for a primitive triple.
TripleParams params_from_triple(const PythTriple& t);

std::vector<PythTriple> enumerate_primitive_triples(const Integer& max_r3);

struct SquareProduct {
  Integer delta;
  Integer r1;
  Integer r2;

  friend bool operator==(const SquareProduct&, const SquareProduct&) = default;
};

// With delta = gcd(a, b): returns (delta, r1, r2) when a = delta*r1^2 and
// b = delta*r2^2, which happens exactly when a*b is a perfect square.
std::optional<SquareProduct> square_product_decompose(const Integer& a, const Integer& b);

struct CoprimenessCheck {
  std::string_view formula;  // the length whose denominator is involved
  std::string_view condition;
  bool holds;
};

// The ten gcd conditions behind the Euclid's-lemma integrality argument.
std::array<CoprimenessCheck, 10> verify_coprimeness(const PythTriple& t);

}  // namespace tt
