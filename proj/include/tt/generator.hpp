#pragma once

#include <optional>
#include <vector>

#include "tt/integrality.hpp"
#include "tt/triples.hpp"

namespace tt {

// A radii pair for which all fourteen lengths (and so all sixteen right
// triangles) are integral: delta = t * r3 * (r1^2 - r2^2).
struct FullConfig {
  TripleParams params;
  Integer t;
  PythTriple triple;
  Integer delta;
  Integer R1;
  Integer R2;
  IntegerLengths lengths;
  Integer d1_radicand;  // squarefree part of r1^2 + 4 r2^2
  Integer d2_radicand;  // squarefree part of 4 r1^2 + r2^2
};

FullConfig generate(const TripleParams& params, const Integer& t);
FullConfig generate_from_triple(const PythTriple& triple, const Integer& t);

// All configurations with R1 <= max_R1, sorted by (R1, R2).
std::vector<FullConfig> enumerate_configs(const Integer& max_R1);

}  // namespace tt
