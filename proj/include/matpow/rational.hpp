#pragma once

#include <gmpxx.h>

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace matpow {

// Exact scalars. BigInt/Rational are GMP classes; mpq_class keeps the
// canonical form we rely on (positive denominator, gcd-reduced), so
// operator== is semantic equality.
using BigInt = mpz_class;
using Rational = mpq_class;

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

struct RadicandMismatch : std::domain_error {
  RadicandMismatch() : std::domain_error("quadratic radicands differ") {}
};

inline Rational rat_div(const Rational& lhs, const Rational& rhs) {
  if (rhs == 0) throw DivisionByZero{};
  return lhs / rhs;
}

// Integer power with the 0^0 = 1 convention. Negative exponents require a
// nonzero base.
inline Rational rat_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (e < 0) {
    if (base == 0) throw DivisionByZero{};
    Rational inv;
    mpq_inv(inv.get_mpq_t(), base.get_mpq_t());
    return rat_pow(inv, -e);
  }
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(),
             static_cast<unsigned long>(e));
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(),
             static_cast<unsigned long>(e));
  return out;  // num/den coprime stays coprime under powers
}

inline BigInt int_pow(const BigInt& base, long e) {
  if (e < 0) throw std::domain_error("negative exponent on integer power");
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

// Zero-extended binomial coefficient: 0 whenever r < 0, n < 0 or r > n.
// The triple sums in the commuting-matrix identities index binom(j, r-j-k)
// with r-j-k ranging outside [0, j], so out-of-range terms must vanish
// silently rather than error.
inline BigInt binomial(long n, long r) {
  if (n < 0 || r < 0 || r > n) return BigInt(0);
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(r));
  return out;
}

// (sum parts)! / prod(parts!), computed as a product of binomials over
// prefix sums.
inline BigInt multinomial(std::span<const long> parts) {
  BigInt out(1);
  long total = 0;
  for (long p : parts) {
    if (p < 0) throw std::domain_error("negative multinomial part");
    total += p;
    out *= binomial(total, p);
  }
  return out;
}

// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational rational_from_string(std::string_view s) {
  Rational r(std::string(s), 10);
  if (r.get_den() == 0) throw DivisionByZero{};
  r.canonicalize();
  return r;
}

}  // namespace matpow
