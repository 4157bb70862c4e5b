#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "tt/exact_arith.hpp"

namespace tt {

// Radii of two externally tangent circles, R1 > R2 > 0.
struct RadiiPair {
  Rational R1;
  Rational R2;
};

void validate(const RadiiPair& r);

// Every named length of the two-circle figure as an exact surd.
struct LengthSet {
  Surd t1t2;  // common tangent segment
  Surd x1;    // C1M
  Surd x2;    // C2M
  Surd a1;    // T1I
  Surd a2;    // T2I
  Surd h1;    // C1M1
  Surd h2;    // C2M2
  Surd m1m;   // x1 - h1
  Surd m2m;   // x2 - h2
  Surd im;
  Surd c2k;
  Surd c1k;
  Surd t2k;
  Surd t1k;
  Surd d1;    // C1T2
  Surd d2;    // C2T1

  static constexpr std::array<std::string_view, 16> kNames{
      "t1t2", "x1", "x2", "a1", "a2", "h1", "h2", "m1m",
      "m2m",  "im", "c2k", "c1k", "t2k", "t1k", "d1", "d2"};

  // Fields in kNames order.
  std::array<const Surd*, 16> fields() const {
    return {&t1t2, &x1, &x2, &a1, &a2, &h1, &h2, &m1m, &m2m, &im, &c2k, &c1k, &t2k, &t1k, &d1, &d2};
  }
  std::array<Surd*, 16> fields() {
    return {&t1t2, &x1, &x2, &a1, &a2, &h1, &h2, &m1m, &m2m, &im, &c2k, &c1k, &t2k, &t1k, &d1, &d2};
  }
  const Surd& at(std::string_view name) const;

  friend bool operator==(const LengthSet&, const LengthSet&) = default;
};

// Human label for a LengthSet field ("t1t2" -> "T1T2", "m1m" -> "M1M").
std::string_view display_name(std::string_view field);

LengthSet compute_lengths(const RadiiPair& r);

struct TriangleRecord {
  int group;             // 1..9, the congruence groups of the figure
  std::string vertices;  // e.g. "C1M1I", right angle at the middle vertex
  Surd leg_a;
  Surd leg_b;
  Surd hyp;
};

std::vector<TriangleRecord> assemble_triangles(const LengthSet& ls, const RadiiPair& r);

bool verify_pythagorean(const TriangleRecord& t);

}  // namespace tt
