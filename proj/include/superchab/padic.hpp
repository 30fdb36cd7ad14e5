#pragma once

#include <string>

#include "superchab/integer.hpp"

namespace superchab {

/// Prime and working relative precision N: units are carried modulo p^N.
class PadicContext {
 public:
  explicit PadicContext(long prime, long precision = 20);

  long prime() const { return prime_; }
  long precision() const { return precision_; }

  friend bool operator==(const PadicContext&, const PadicContext&) = default;

 private:
  long prime_;
  long precision_;
};

/// Element of Q_p in capped-relative form p^v * u.
///
/// A nonzero value knows its valuation exactly and its unit modulo
/// p^relative_precision (at most N). Zero carries the absolute precision to
/// which it is known to vanish; the exact zero has absolute precision kInfinity.
/// Arithmetic propagates precision: cancellation in a sum and division by p
/// both shrink it, and nothing is padded back.
class PadicNumber {
 public:
  explicit PadicNumber(const PadicContext& ctx);  // exact zero

  static PadicNumber zero(const PadicContext& ctx, long absolute_precision = kInfinity);
  static PadicNumber from_integer(const Integer& n, const PadicContext& ctx);
  static PadicNumber from_rational(const Rational& q, const PadicContext& ctx);
  static PadicNumber from_rational(const Integer& num, const Integer& den, const PadicContext& ctx);
  // p^v * unit with the unit known modulo p^relative_precision.
  static PadicNumber from_parts(long valuation, const Integer& unit, long relative_precision,
                                const PadicContext& ctx);

  const PadicContext& context() const { return ctx_; }
  long prime() const { return ctx_.prime(); }

  bool is_zero() const { return zero_; }
  bool is_exact_zero() const { return zero_ && abs_prec_ >= kInfinity; }
  // For zero: the absolute precision (a lower bound for the true valuation).
  long valuation() const { return zero_ ? abs_prec_ : valuation_; }
  const Integer& unit() const { return unit_; }
  long relative_precision() const { return zero_ ? 0 : abs_prec_ - valuation_; }
  long absolute_precision() const { return abs_prec_; }

  PadicNumber operator-() const;
  friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b);
  PadicNumber& operator+=(const PadicNumber& b) { return *this = *this + b; }
  PadicNumber& operator-=(const PadicNumber& b) { return *this = *this - b; }
  PadicNumber& operator*=(const PadicNumber& b) { return *this = *this * b; }

  PadicNumber inverse() const;
  PadicNumber pow(long exponent) const;
  PadicNumber with_absolute_precision(long absolute_precision) const;

  // Representative of x modulo p^k in [0, p^k); needs v(x) >= 0 and k <= absolute precision.
  Integer residue(long k) const;
  // Rational p^v * unit (unit taken in [0, p^relative_precision)).
  Rational lift() const;
  // v(x - y) >= k.
  bool congruent(const PadicNumber& other, long k) const;

  std::string to_string() const;

 private:
  PadicNumber(const PadicContext& ctx, long valuation, Integer unit, long absolute_precision);

  PadicContext ctx_;
  bool zero_ = true;
  long valuation_ = 0;
  Integer unit_ = 0;
  long abs_prec_ = kInfinity;
};

// m-th power classes; require p not dividing m.
bool is_mth_power(const PadicNumber& x, long m);
PadicNumber mth_root(const PadicNumber& x, long m);
PadicNumber primitive_root_of_unity(long m, const PadicContext& ctx);

/// Logarithm branch with Log(p) = 0: Log(p^v u) = log(u^e)/e, e = p - 1 (or 2 for p = 2).
PadicNumber iwasawa_log(const PadicNumber& x);

struct ChabautyPrime {
  long prime = 0;
  Integer cap;             // 2^phi(m) - 1, the cap quoted with the theorem
  bool within_cap = false;
};

/// Least prime congruent to 1 modulo m (m >= 2), with the exponential cap.
ChabautyPrime chabauty_prime(long m);

}  // namespace superchab
