#include "tt/generator.hpp"

#include <algorithm>

#include "tt/lengths.hpp"

namespace tt {

namespace {

IntegerLengths closed_form_lengths(const PythTriple& triple, const Integer& t) {
  const Integer& r1 = triple.r1;
  const Integer& r2 = triple.r2;
  const Integer& r3 = triple.r3;
  const Integer diff = r1 * r1 - r2 * r2;

  IntegerLengths out;
  out.at("T1T2") = 2 * t * r1 * r2 * r3 * diff;
  out.at("x1") = t * r1 * r3 * r3 * diff;
  out.at("x2") = t * r2 * r3 * r3 * diff;
  out.at("a1") = 2 * t * r2 * r1 * r1 * diff;
  out.at("a2") = 2 * t * r1 * r2 * r2 * diff;
  out.at("h1") = t * r1 * r1 * r1 * diff;
  out.at("h2") = t * r2 * r2 * r2 * diff;
  out.at("x1mh1") = t * r1 * r2 * r2 * diff;
  out.at("x2mh2") = t * r2 * r1 * r1 * diff;
  out.at("IM") = t * r1 * r2 * r3 * diff;
  out.at("C2K") = t * r2 * r2 * r3 * r3 * r3;
  out.at("T2K") = 2 * t * r1 * r3 * r2 * r2 * r2;
  out.at("C1K") = t * r1 * r1 * r3 * r3 * r3;
  out.at("T1K") = 2 * t * r2 * r3 * r1 * r1 * r1;
  return out;
}

// Field of the surd engine's LengthSet that carries each closed-form length.
constexpr std::array<std::string_view, 14> kSurdField{
    "t1t2", "x1", "x2", "a1", "a2", "h1", "h2", "m1m", "m2m", "im", "c2k", "t2k", "c1k", "t1k"};

void cross_check_with_surds(const FullConfig& config) {
  const LengthSet ls = compute_lengths({Rational(config.R1), Rational(config.R2)});
  for (std::size_t i = 0; i < kSurdField.size(); ++i) {
    const Surd& surd = ls.at(kSurdField[i]);
    if (!surd.is_rational() || surd.coef() != Rational(config.lengths.values[i])) {
      throw Error(ErrorKind::VerificationFailure,
                  "closed form " + std::string(IntegerLengths::kNames[i]) + " = " +
                      to_string(config.lengths.values[i]) + " disagrees with surd engine value " +
                      to_string(surd));
    }
  }
}

}  // namespace

FullConfig generate_from_triple(const PythTriple& triple, const Integer& t) {
  if (!is_primitive_triple(triple)) {
    throw Error(ErrorKind::InvalidParams, "not a primitive triple with r1 > r2");
  }
  if (t < 1) throw Error(ErrorKind::InvalidParams, "t must be a positive integer");

  FullConfig config;
  config.params = params_from_triple(triple);
  config.t = t;
  config.triple = triple;
  const Integer diff = triple.r1 * triple.r1 - triple.r2 * triple.r2;
  config.delta = t * triple.r3 * diff;
  config.R1 = config.delta * triple.r1 * triple.r1;
  config.R2 = config.delta * triple.r2 * triple.r2;
  config.lengths = closed_form_lengths(triple, t);
  config.d1_radicand = squarefree_decompose(triple.r1 * triple.r1 + 4 * triple.r2 * triple.r2).squarefree;
  config.d2_radicand = squarefree_decompose(4 * triple.r1 * triple.r1 + triple.r2 * triple.r2).squarefree;
  cross_check_with_surds(config);
  return config;
}

FullConfig generate(const TripleParams& params, const Integer& t) {
  if (!is_valid(params)) {
    throw Error(ErrorKind::InvalidParams, "m and n must be coprime with opposite parity and m > n >= 1");
  }
  if (t < 1) throw Error(ErrorKind::InvalidParams, "t must be a positive integer");
  return generate_from_triple(triple_from_params(params), t);
}

std::vector<FullConfig> enumerate_configs(const Integer& max_R1) {
  std::vector<FullConfig> out;
  // r3 >= m^2, r1^2 > r3^2/2 and r1^2 - r2^2 >= 1 give R1 > m^6 / 2 at t = 1.
  for (Integer m = 2; m * m * m * m * m * m <= 2 * max_R1; ++m) {
    for (Integer n = 1; n < m; ++n) {
      const TripleParams params{m, n};
      if (!is_valid(params)) continue;
      const PythTriple triple = triple_from_params(params);
      const Integer base = triple.r3 * triple.r1 * triple.r1 * (triple.r1 * triple.r1 - triple.r2 * triple.r2);
      for (Integer t = 1; t * base <= max_R1; ++t) out.push_back(generate_from_triple(triple, t));
    }
  }
  std::sort(out.begin(), out.end(), [](const FullConfig& a, const FullConfig& b) {
    return a.R1 != b.R1 ? a.R1 < b.R1 : a.R2 < b.R2;
  });
  return out;
}

}  // namespace tt
