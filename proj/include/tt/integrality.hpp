#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "tt/exact_arith.hpp"
#include "tt/triples.hpp"

namespace tt {

// The fourteen lengths that become rational once R1*R2 is a square and
// r1^2 + r2^2 is a square, in the fixed order used by every output format.
template <typename T>
struct LengthTable {
  static constexpr std::array<std::string_view, 14> kNames{
      "T1T2", "x1", "x2", "a1", "a2", "h1", "h2",
      "x1mh1", "x2mh2", "IM", "C2K", "T2K", "C1K", "T1K"};

  std::array<T, 14> values{};

  T& at(std::string_view name) { return values[index_of(name)]; }
  const T& at(std::string_view name) const { return values[index_of(name)]; }

  static std::size_t index_of(std::string_view name) {
    for (std::size_t i = 0; i < kNames.size(); ++i) {
      if (kNames[i] == name) return i;
    }
    throw Error(ErrorKind::InvalidInput, "unknown length '" + std::string(name) + "'");
  }

  bool operator==(const LengthTable&) const = default;
};

using RationalLengths = LengthTable<Rational>;
using IntegerLengths = LengthTable<Integer>;

enum class Tier {
  NonSquareProduct,  // R1*R2 not a square: T1T2 irrational
  TangentIntegral,   // T1T2 and IM integral
  CevianIntegral,    // additionally x1, x2 integral, the rest rational
  FullyIntegral,     // all fourteen lengths integral
};

std::string_view to_string(Tier tier);
Tier parse_tier(std::string_view text);

struct IntegralityReport {
  Tier tier = Tier::NonSquareProduct;
  std::optional<Integer> delta;
  std::optional<Integer> r1;
  std::optional<Integer> r2;
  std::optional<Integer> r3;
  std::optional<Integer> t;
  std::optional<RationalLengths> rational_lengths;

  friend bool operator==(const IntegralityReport&, const IntegralityReport&) = default;
};

IntegralityReport classify(const Integer& R1, const Integer& R2);

// Each length equals delta * numerator / denominator for a fixed triple.
struct LengthFraction {
  Integer numerator;
  Integer denominator;
};
using LengthFractions = LengthTable<LengthFraction>;

LengthFractions length_fractions(const PythTriple& triple);

// True iff every delta * numerator / denominator is an integer.
bool all_integral(const LengthFractions& fractions, const Integer& delta);

// Exact lengths for R1 = delta*r1^2, R2 = delta*r2^2 with (r1, r2, r3) primitive.
RationalLengths rational_lengths(const Integer& delta, const PythTriple& triple);

// True iff all fourteen rational lengths are integers, decided by evaluating
// them (not by the divisibility shortcut, which it must agree with).
bool necessity_check(const PythTriple& triple, const Integer& delta);

}  // namespace tt
