#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "tt/error.hpp"

namespace tt {

// Arbitrary-precision integer and canonical (reduced, positive denominator)
// fraction. mpq_class keeps the gcd/sign invariants after every operation as
// long as values are built through make_rational().
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den = 1);
bool is_integer(const Rational& q);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);
// Accepts "p" or "p/q" with optional sign; the result is canonicalized.
Rational parse_rational(std::string_view text);

struct SquarefreeParts {
  Integer squarefree;  // s
  Integer square_root; // k, with n = s * k^2
};

// Trial division for small factors, Pollard-Brent rho for what remains.
// n must be >= 1.
SquarefreeParts squarefree_decompose(const Integer& n);

bool is_perfect_square(const Integer& n);
// floor(sqrt(n)) for n >= 0.
Integer integer_sqrt(const Integer& n);

// A nonnegative real coef * sqrt(radicand), radicand squarefree.
// Zero is always 0 * sqrt(1), so structural equality is value equality.
class Surd {
 public:
  Surd() : coef_(0), radicand_(1) {}
  // Builds a canonical surd; radicand must already be squarefree.
  Surd(Rational coef, Integer radicand);

  static Surd from_rational(const Rational& q);

  const Rational& coef() const { return coef_; }
  const Integer& radicand() const { return radicand_; }

  bool is_zero() const { return coef_ == 0; }
  bool is_rational() const { return radicand_ == 1; }

  Surd scaled(const Rational& factor) const;
  Surd halved() const { return scaled(Rational(1, 2)); }

  friend bool operator==(const Surd& a, const Surd& b) {
    return a.coef_ == b.coef_ && a.radicand_ == b.radicand_;
  }

 private:
  Rational coef_;
  Integer radicand_;
};

Surd surd_from_sqrt(const Rational& q);
Surd surd_mul(const Surd& a, const Surd& b);
Rational surd_square(const Surd& a);
Surd surd_add(const Surd& a, const Surd& b);
// a - b; same radicand rule as surd_add and the result must stay >= 0.
Surd surd_sub(const Surd& a, const Surd& b);
std::strong_ordering surd_cmp(const Surd& a, const Surd& b);
double surd_to_float(const Surd& a);

// "a/b" (or "a") when radicand is 1, else "a/b*sqrt(s)".
std::string to_string(const Surd& s);
Surd parse_surd(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Surd& s);

}  // namespace tt
