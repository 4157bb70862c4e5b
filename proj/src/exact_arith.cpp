#include "tt/exact_arith.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <vector>

namespace tt {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::IncompatibleRadicands: return "incompatible-radicands";
    case ErrorKind::InvalidParams: return "invalid-params";
    case ErrorKind::InvalidRadii: return "invalid-radii";
    case ErrorKind::InvalidTriple: return "invalid-triple";
    case ErrorKind::VerificationFailure: return "verification-failure";
  }
  return "unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::InvalidInput, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view text) {
  text = trim(text);
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw Error(ErrorKind::InvalidInput, "empty integer");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorKind::InvalidInput, "not an integer: '" + std::string(text) + "'");
    }
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return Integer(s, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den <= 0) throw Error(ErrorKind::InvalidInput, "denominator must be positive");
  return make_rational(parse_integer(text.substr(0, slash)), den);
}

namespace {

constexpr unsigned long kTrialBound = 1u << 12;

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Brent's variant of Pollard rho; n is an odd composite with no factor below
// kTrialBound. Returns a nontrivial factor.
Integer pollard_brent(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2;
    Integer x;
    Integer ys;
    Integer q = 1;
    Integer g = 1;
    unsigned long r = 1;
    constexpr unsigned long kBatch = 64;
    auto step = [&](Integer& v) {
      v = v * v + c;
      v %= n;
    };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      for (unsigned long k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        for (unsigned long i = 0; i < std::min(kBatch, r - k); ++i) {
          step(y);
          Integer diff = x - y;
          q = q * abs(diff) % n;
        }
        g = gcd(q, n);
      }
      r *= 2;
    }
    if (g == n) {
      // batch overshot; replay one step at a time
      do {
        step(ys);
        Integer diff = x - ys;
        g = gcd(abs(diff), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

// Adds the prime factorization of n (no factor below kTrialBound) to out.
void split_large(const Integer& n, std::vector<Integer>& primes) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
    primes.push_back(n);
    return;
  }
  if (mpz_perfect_power_p(n.get_mpz_t()) != 0) {
    const auto bits = static_cast<unsigned long>(mpz_sizeinbase(n.get_mpz_t(), 2));
    for (unsigned long e = bits; e >= 2; --e) {
      Integer root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
        for (unsigned long i = 0; i < e; ++i) split_large(root, primes);
        return;
      }
    }
  }
  Integer d = pollard_brent(n);
  split_large(d, primes);
  split_large(Integer(n / d), primes);
}

}  // namespace

SquarefreeParts squarefree_decompose(const Integer& n) {
  if (n <= 0) throw Error(ErrorKind::InvalidInput, "squarefree_decompose needs n >= 1");
  Integer rest = n;
  Integer s = 1;
  Integer k = 1;
  for (unsigned long p = 2; p < kTrialBound && rest > 1; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > rest) break;
    unsigned exponent = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++exponent;
    }
    for (unsigned i = 0; i < exponent / 2; ++i) k *= p;
    if (exponent % 2 == 1) s *= p;
  }
  if (rest == 1) return {s, k};
  if (rest < Integer(kTrialBound) * kTrialBound) {
    // no factor below sqrt(rest): it is prime
    return {s * rest, k};
  }

  std::vector<Integer> primes;
  split_large(rest, primes);
  std::sort(primes.begin(), primes.end());
  for (std::size_t i = 0; i < primes.size();) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    const std::size_t exponent = j - i;
    for (std::size_t e = 0; e < exponent / 2; ++e) k *= primes[i];
    if (exponent % 2 == 1) s *= primes[i];
    i = j;
  }
  return {s, k};
}

Integer integer_sqrt(const Integer& n) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "square root of a negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Integer& n) {
  if (n < 0) return false;
  Integer r = integer_sqrt(n);
  return r * r == n;
}

Surd::Surd(Rational coef, Integer radicand) : coef_(std::move(coef)), radicand_(std::move(radicand)) {
  coef_.canonicalize();
  if (coef_ < 0) throw Error(ErrorKind::InvalidInput, "surd coefficient must be nonnegative");
  if (radicand_ < 1) throw Error(ErrorKind::InvalidInput, "surd radicand must be positive");
  if (coef_ == 0) radicand_ = 1;
}

Surd Surd::from_rational(const Rational& q) { return Surd(q, 1); }

Surd Surd::scaled(const Rational& factor) const {
  if (factor < 0) throw Error(ErrorKind::InvalidInput, "surd scale factor must be nonnegative");
  return Surd(coef_ * factor, radicand_);
}

Surd surd_from_sqrt(const Rational& q) {
  if (q < 0) throw Error(ErrorKind::InvalidInput, "square root of a negative rational");
  if (q == 0) return Surd();
  // sqrt(a/b) = sqrt(a*b) / b
  const Integer& b = q.get_den();
  auto [s, k] = squarefree_decompose(q.get_num() * b);
  return Surd(make_rational(k, b), s);
}

Surd surd_mul(const Surd& a, const Surd& b) {
  if (a.is_zero() || b.is_zero()) return Surd();
  // s1*s2 = g^2 * (s1/g)*(s2/g); the cofactors are coprime and squarefree.
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.radicand().get_mpz_t(), b.radicand().get_mpz_t());
  Integer radicand = (a.radicand() / g) * (b.radicand() / g);
  return Surd(a.coef() * b.coef() * Rational(g), radicand);
}

Rational surd_square(const Surd& a) { return a.coef() * a.coef() * Rational(a.radicand()); }

namespace {

void require_compatible(const Surd& a, const Surd& b, const char* op) {
  if (a.is_zero() || b.is_zero() || a.radicand() == b.radicand()) return;
  throw Error(ErrorKind::IncompatibleRadicands,
              std::string(op) + " of surds with radicands " + to_string(a.radicand()) + " and " +
                  to_string(b.radicand()));
}

}  // namespace

Surd surd_add(const Surd& a, const Surd& b) {
  require_compatible(a, b, "sum");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return Surd(a.coef() + b.coef(), a.radicand());
}

Surd surd_sub(const Surd& a, const Surd& b) {
  if (b.is_zero()) return a;
  require_compatible(a, b, "difference");
  if (a.is_zero() || a.coef() < b.coef()) {
    throw Error(ErrorKind::InvalidInput, "surd difference would be negative");
  }
  return Surd(a.coef() - b.coef(), b.radicand());
}

std::strong_ordering surd_cmp(const Surd& a, const Surd& b) {
  Rational lhs = surd_square(a);
  Rational rhs = surd_square(b);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double surd_to_float(const Surd& a) {
  // mpq_get_d truncates (< 1 ulp); sqrt halves that relative error and adds
  // its own half-ulp rounding.
  if (a.is_rational()) return a.coef().get_d();
  return std::sqrt(surd_square(a).get_d());
}

std::string to_string(const Surd& s) {
  std::string out = to_string(s.coef());
  if (!s.is_rational()) out += "*sqrt(" + to_string(s.radicand()) + ")";
  return out;
}

Surd parse_surd(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw Error(ErrorKind::InvalidInput, "empty surd");
  Rational coef = 1;
  std::string_view root_part;
  if (auto star = text.find('*'); star != std::string_view::npos) {
    coef = parse_rational(text.substr(0, star));
    root_part = trim(text.substr(star + 1));
  } else if (text.starts_with("sqrt(")) {
    root_part = text;
  } else {
    coef = parse_rational(text);
  }
  if (coef < 0) throw Error(ErrorKind::InvalidInput, "surd coefficient must be nonnegative");
  if (root_part.empty()) return Surd::from_rational(coef);
  if (!root_part.starts_with("sqrt(") || !root_part.ends_with(")")) {
    throw Error(ErrorKind::InvalidInput, "malformed surd: '" + std::string(text) + "'");
  }
  Integer radicand = parse_integer(root_part.substr(5, root_part.size() - 6));
  if (radicand < 1) throw Error(ErrorKind::InvalidInput, "surd radicand must be positive");
  return surd_mul(Surd::from_rational(coef), surd_from_sqrt(Rational(radicand)));
}

std::ostream& operator<<(std::ostream& os, const Surd& s) { return os << to_string(s); }

}  // namespace tt
