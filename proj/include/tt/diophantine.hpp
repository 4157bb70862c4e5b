#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "tt/exact_arith.hpp"
#include "tt/triples.hpp"

namespace tt {

enum class Quartic {
  Plus14,      // x^4 + 14 x^2 y^2 + y^4 = z^2
  MinusMixed,  // x^4 - x^2 y^2 + y^4 = z^2
};

std::string_view to_string(Quartic equation);

struct QuarticHit {
  Integer x;
  Integer y;
  Integer z;
  Quartic equation;

  friend bool operator==(const QuarticHit&, const QuarticHit&) = default;
};

Integer quartic_value(Quartic equation, const Integer& x, const Integer& y);

// Coprime pairs 1 <= x, y <= bound. Plus14 additionally requires x + y odd
// unless opposite_parity_only is false. Hits are sorted by (x, y).
std::vector<QuarticHit> search_plus14(std::uint64_t bound, bool opposite_parity_only = true);
std::vector<QuarticHit> search_minus_mixed(std::uint64_t bound);

struct IrrationalityCertificate {
  Integer d1_radicand_raw;  // r1^2 + 4 r2^2
  Integer d2_radicand_raw;  // 4 r1^2 + r2^2
  bool d1_irrational;
  bool d2_irrational;
};

// The diagonals C1T2 = delta*r1*sqrt(r1^2 + 4 r2^2) and
// C2T1 = delta*r2*sqrt(4 r1^2 + r2^2); delta does not affect rationality.
IrrationalityCertificate certify_irrational(const PythTriple& triple);

}  // namespace tt
