#include "tt/lengths.hpp"

namespace tt {

void validate(const RadiiPair& r) {
  if (r.R2 <= 0) throw Error(ErrorKind::InvalidRadii, "radii must be positive");
  if (r.R1 <= r.R2) throw Error(ErrorKind::InvalidRadii, "require R1 > R2");
}

const Surd& LengthSet::at(std::string_view name) const {
  auto all = fields();
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return *all[i];
  }
  throw Error(ErrorKind::InvalidInput, "unknown length '" + std::string(name) + "'");
}

std::string_view display_name(std::string_view field) {
  static constexpr std::array<std::string_view, 16> labels{
      "T1T2", "x1", "x2", "a1", "a2", "h1", "h2", "M1M",
      "M2M",  "IM", "C2K", "C1K", "T2K", "T1K", "d1", "d2"};
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (LengthSet::kNames[i] == field) return labels[i];
  }
  return field;
}

LengthSet compute_lengths(const RadiiPair& r) {
  validate(r);
  const Rational& R1 = r.R1;
  const Rational& R2 = r.R2;
  const Rational sum = R1 + R2;
  const Rational diff = R1 - R2;
  const Rational product = R1 * R2;

  LengthSet ls;
  ls.t1t2 = surd_from_sqrt(4 * product);
  ls.x1 = surd_from_sqrt(R1 * sum);
  ls.x2 = surd_from_sqrt(R2 * sum);
  ls.a1 = surd_from_sqrt(4 * R1 * R1 * R2 / sum);
  ls.a2 = surd_from_sqrt(4 * R2 * R2 * R1 / sum);
  ls.h1 = surd_from_sqrt(R1 * R1 * R1 / sum);
  ls.h2 = surd_from_sqrt(R2 * R2 * R2 / sum);
  ls.m1m = surd_sub(ls.x1, ls.h1);
  ls.m2m = surd_sub(ls.x2, ls.h2);
  ls.im = surd_from_sqrt(product);
  ls.c2k = Surd::from_rational(R2 * sum / diff);
  ls.c1k = Surd::from_rational(R1 * sum / diff);
  ls.t2k = surd_from_sqrt(4 * R2 * R2 * product / (diff * diff));
  ls.t1k = surd_from_sqrt(4 * R1 * R1 * product / (diff * diff));
  ls.d1 = surd_from_sqrt(R1 * (R1 + 4 * R2));
  ls.d2 = surd_from_sqrt(R2 * (4 * R1 + R2));
  return ls;
}

std::vector<TriangleRecord> assemble_triangles(const LengthSet& ls, const RadiiPair& r) {
  validate(r);
  const Surd R1 = Surd::from_rational(r.R1);
  const Surd R2 = Surd::from_rational(r.R2);
  const Surd half_a1 = ls.a1.halved();
  const Surd half_a2 = ls.a2.halved();
  const Surd half_t1t2 = ls.t1t2.halved();
  return {
      {1, "T1M1C1", ls.h1, half_a1, R1},
      {1, "C1M1I", ls.h1, half_a1, R1},
      {2, "IM2C2", ls.h2, half_a2, R2},
      {2, "C2M2T2", ls.h2, half_a2, R2},
      {3, "T1M1M", half_a1, half_a2, half_t1t2},
      {3, "MM1I", half_a2, half_a1, half_t1t2},
      {3, "IM2M", half_a2, half_a1, half_t1t2},
      {3, "MM2T2", half_a1, half_a2, half_t1t2},
      {4, "C1T1M", R1, half_t1t2, ls.x1},
      {4, "MIC1", half_t1t2, R1, ls.x1},
      {5, "C2T2M", R2, half_t1t2, ls.x2},
      {5, "MIC2", half_t1t2, R2, ls.x2},
      {6, "C1MC2", ls.x1, ls.x2, Surd::from_rational(r.R1 + r.R2)},
      {7, "T1IT2", ls.a1, ls.a2, ls.t1t2},
      {8, "C2T2K", R2, ls.t2k, ls.c2k},
      {9, "C1T1K", R1, ls.t1k, ls.c1k},
  };
}

bool verify_pythagorean(const TriangleRecord& t) {
  return surd_square(t.leg_a) + surd_square(t.leg_b) == surd_square(t.hyp);
}

}  // namespace tt
