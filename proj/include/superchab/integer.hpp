#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace superchab {

using Integer = mpz_class;
using Rational = mpq_class;

// Sentinel for "no finite value" in valuation and precision bookkeeping.
inline constexpr long kInfinity = 1L << 60;

// Saturating addition on valuations; kInfinity absorbs.
inline long sat_add(long a, long b) {
  if (a >= kInfinity || b >= kInfinity) return kInfinity;
  return a + b;
}

// Canonical a/b (the two-argument mpq constructor does not reduce).
inline Rational frac(const Integer& a, const Integer& b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

Integer ipow(const Integer& base, unsigned long exponent);
Integer pow_p(long p, long k);

// p-adic valuation of a nonzero integer; kInfinity for zero.
long valuation(const Integer& n, long p);
long valuation(const Rational& q, long p);

// Integer with the p-power stripped off (sign kept).
Integer strip_p(const Integer& n, long p);

Integer mod_positive(const Integer& a, const Integer& modulus);
Integer mod_inverse(const Integer& a, const Integer& modulus);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
long to_long(const Integer& n);

bool is_prime(long n);
long euler_phi(long n);

// Exact "num/den" (or plain "num" when den = 1) rendering used in all reports.
std::string to_fraction_string(const Rational& q);
Rational parse_fraction(const std::string& text);

}  // namespace superchab
