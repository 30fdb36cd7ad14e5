#include "superchab/padic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "superchab/errors.hpp"

namespace superchab {

PadicContext::PadicContext(long prime, long precision) : prime_(prime), precision_(precision) {
  if (!is_prime(prime)) throw DomainError("PadicContext: " + std::to_string(prime) + " is not prime");
  if (precision < 1) throw DomainError("PadicContext: precision must be >= 1");
}

PadicNumber::PadicNumber(const PadicContext& ctx) : ctx_(ctx) {}

PadicNumber::PadicNumber(const PadicContext& ctx, long valuation, Integer unit, long absolute_precision)
    : ctx_(ctx), zero_(false), valuation_(valuation), unit_(std::move(unit)), abs_prec_(absolute_precision) {}

namespace {

// Normalizes p^v * s known modulo p^abs.
PadicNumber normalize(const PadicContext& ctx, long v, const Integer& s, long abs) {
  if (v >= abs) return PadicNumber::zero(ctx, abs);
  const long p = ctx.prime();
  Integer reduced = mod_positive(s, pow_p(p, abs - v));
  if (reduced == 0) return PadicNumber::zero(ctx, abs);
  const long k = valuation(reduced, p);
  const long vv = v + k;
  const long rel = std::min(ctx.precision(), abs - vv);
  return PadicNumber::from_parts(vv, strip_p(reduced, p), rel, ctx);
}

}  // namespace

PadicNumber PadicNumber::zero(const PadicContext& ctx, long absolute_precision) {
  PadicNumber z(ctx);
  z.abs_prec_ = std::min(absolute_precision, kInfinity);
  return z;
}

PadicNumber PadicNumber::from_parts(long valuation, const Integer& unit, long relative_precision,
                                    const PadicContext& ctx) {
  if (relative_precision <= 0) return zero(ctx, valuation);
  const long rel = std::min(relative_precision, ctx.precision());
  Integer u = mod_positive(unit, pow_p(ctx.prime(), rel));
  if (u % ctx.prime() == 0) throw DomainError("from_parts: unit divisible by p");
  return PadicNumber(ctx, valuation, std::move(u), valuation + rel);
}

PadicNumber PadicNumber::from_integer(const Integer& n, const PadicContext& ctx) {
  return from_rational(Rational(n), ctx);
}

PadicNumber PadicNumber::from_rational(const Integer& num, const Integer& den, const PadicContext& ctx) {
  if (den == 0) throw DomainError("from_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return from_rational(q, ctx);
}

PadicNumber PadicNumber::from_rational(const Rational& q, const PadicContext& ctx) {
  if (q == 0) return PadicNumber(ctx);
  const long p = ctx.prime();
  const long v = superchab::valuation(q, p);
  const Integer modulus = pow_p(p, ctx.precision());
  Integer u = mod_positive(strip_p(q.get_num(), p) * mod_inverse(strip_p(q.get_den(), p), modulus), modulus);
  return PadicNumber(ctx, v, std::move(u), v + ctx.precision());
}

PadicNumber PadicNumber::operator-() const {
  if (zero_) return *this;
  const Integer modulus = pow_p(ctx_.prime(), relative_precision());
  return PadicNumber(ctx_, valuation_, mod_positive(-unit_, modulus), abs_prec_);
}

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
  const PadicContext& ctx = a.ctx_;
  if (!(a.ctx_ == b.ctx_)) throw DomainError("p-adic numbers from different contexts");
  const long abs = std::min(a.abs_prec_, b.abs_prec_);
  if (a.zero_ && b.zero_) return PadicNumber::zero(ctx, abs);
  if (a.zero_) return normalize(ctx, b.valuation_, b.unit_, abs);
  if (b.zero_) return normalize(ctx, a.valuation_, a.unit_, abs);
  const long v = std::min(a.valuation_, b.valuation_);
  if (v >= abs) return PadicNumber::zero(ctx, abs);
  const long p = ctx.prime();
  Integer s = 0;
  if (a.valuation_ - v < abs - v) s += a.unit_ * pow_p(p, a.valuation_ - v);
  if (b.valuation_ - v < abs - v) s += b.unit_ * pow_p(p, b.valuation_ - v);
  return normalize(ctx, v, s, abs);
}

PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
  const PadicContext& ctx = a.ctx_;
  if (!(a.ctx_ == b.ctx_)) throw DomainError("p-adic numbers from different contexts");
  if (a.zero_ || b.zero_) {
    return PadicNumber::zero(ctx, sat_add(a.valuation(), b.valuation()));
  }
  const long rel = std::min(a.relative_precision(), b.relative_precision());
  const long v = a.valuation_ + b.valuation_;
  return PadicNumber(ctx, v, mod_positive(a.unit_ * b.unit_, pow_p(ctx.prime(), rel)), v + rel);
}

PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) { return a * b.inverse(); }

PadicNumber PadicNumber::inverse() const {
  if (zero_) throw DomainError("division by a p-adic zero");
  const long rel = relative_precision();
  return PadicNumber(ctx_, -valuation_, mod_inverse(unit_, pow_p(ctx_.prime(), rel)), -valuation_ + rel);
}

PadicNumber PadicNumber::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  PadicNumber result = from_integer(1, ctx_);
  PadicNumber base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

PadicNumber PadicNumber::with_absolute_precision(long absolute_precision) const {
  if (absolute_precision >= abs_prec_) return *this;
  if (zero_) return zero(ctx_, absolute_precision);
  return normalize(ctx_, valuation_, unit_, absolute_precision);
}

Integer PadicNumber::residue(long k) const {
  if (k <= 0) return 0;
  if (abs_prec_ < k) throw PrecisionError("residue: value known only modulo p^" + std::to_string(abs_prec_));
  if (zero_) return 0;
  if (valuation_ < 0) throw DomainError("residue: value is not p-integral");
  if (valuation_ >= k) return 0;
  return mod_positive(unit_ * pow_p(ctx_.prime(), valuation_), pow_p(ctx_.prime(), k));
}

Rational PadicNumber::lift() const {
  if (zero_) return 0;
  if (valuation_ >= 0) return Rational(unit_ * pow_p(ctx_.prime(), valuation_));
  Rational q(unit_, pow_p(ctx_.prime(), -valuation_));
  q.canonicalize();
  return q;
}

bool PadicNumber::congruent(const PadicNumber& other, long k) const {
  return (*this - other).valuation() >= k;
}

std::string PadicNumber::to_string() const {
  std::ostringstream os;
  const long p = ctx_.prime();
  if (zero_) {
    os << "0";
  } else {
    os << p << "^" << valuation_ << "*" << unit_.get_str();
  }
  if (abs_prec_ < kInfinity) os << " + O(" << p << "^" << abs_prec_ << ")";
  return os.str();
}

namespace {

void require_coprime(long p, long m) {
  if (m <= 0) throw DomainError("power index must be positive");
  if (m % p == 0) throw DomainError("coprimality violated: p = " + std::to_string(p) + " divides m = " + std::to_string(m));
}

Integer powmod(const Integer& base, const Integer& exponent, const Integer& modulus) {
  Integer r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

// Newton iteration for r^m = target starting from a simple root modulo p.
Integer hensel_mth_root(Integer r, long m, const Integer& target, long p, long precision) {
  const Integer modulus = pow_p(p, precision);
  long known = 1;
  while (known < precision) {
    known = std::min(2 * known, precision);
    const Integer mod_k = pow_p(p, known);
    Integer value = powmod(r, m, mod_k) - target;
    Integer deriv = mod_positive(Integer(m) * powmod(r, m - 1, mod_k), mod_k);
    r = mod_positive(r - value * mod_inverse(deriv, mod_k), mod_k);
  }
  if (mod_positive(powmod(r, m, modulus) - target, modulus) != 0) {
    throw VerificationError("Hensel lift failed to converge");
  }
  return r;
}

}  // namespace

bool is_mth_power(const PadicNumber& x, long m) {
  const long p = x.prime();
  require_coprime(p, m);
  if (x.is_zero()) throw DomainError("zero has no well-defined power class");
  if (x.valuation() % m != 0) return false;
  const long g = std::gcd(m, p - 1);
  const Integer u = x.unit() % p;
  return powmod(u, (p - 1) / g, Integer(p)) == 1;
}

PadicNumber mth_root(const PadicNumber& x, long m) {
  const long p = x.prime();
  if (!is_mth_power(x, m)) {
    std::ostringstream os;
    os << "not an m-th power (m = " << m << "): ";
    if (x.valuation() % m != 0) {
      os << "valuation " << x.valuation() << " not divisible by m";
    } else {
      const long g = std::gcd(m, p - 1);
      os << "u^((p-1)/g) = " << x.unit() % p << "^" << (p - 1) / g << " != 1 mod " << p;
    }
    throw DomainError(os.str());
  }
  if (m == 1) return x;
  const Integer target = x.unit();
  Integer r = 0;
  for (long c = 1; c < p; ++c) {
    if (powmod(Integer(c), m, Integer(p)) == target % p) {
      r = c;
      break;
    }
  }
  const long rel = x.relative_precision();
  return PadicNumber::from_parts(x.valuation() / m, hensel_mth_root(r, m, target, p, rel), rel, x.context());
}

PadicNumber primitive_root_of_unity(long m, const PadicContext& ctx) {
  const long p = ctx.prime();
  if (m <= 0) throw DomainError("root of unity order must be positive");
  if (m == 1) return PadicNumber::from_integer(1, ctx);
  if ((p - 1) % m != 0) {
    throw DomainError("root of unity absent from Q_p: p = " + std::to_string(p) + " is not 1 mod " + std::to_string(m));
  }
  std::vector<long> prime_factors;
  for (long n = m, d = 2; n > 1; ++d) {
    if (n % d == 0) {
      prime_factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  for (long c = 2; c < p; ++c) {
    if (powmod(Integer(c), m, Integer(p)) != 1) continue;
    bool exact_order = std::all_of(prime_factors.begin(), prime_factors.end(),
                                   [&](long q) { return powmod(Integer(c), m / q, Integer(p)) != 1; });
    if (!exact_order) continue;
    return PadicNumber::from_parts(0, hensel_mth_root(c, m, 1, p, ctx.precision()), ctx.precision(), ctx);
  }
  throw VerificationError("no element of exact order m found modulo p");
}

PadicNumber iwasawa_log(const PadicNumber& x) {
  if (x.is_zero()) throw DomainError("logarithm of zero");
  const PadicContext& ctx = x.context();
  const long p = ctx.prime();
  const long e = p == 2 ? 2 : p - 1;
  PadicNumber u = PadicNumber::from_parts(0, x.unit(), x.relative_precision(), ctx);
  PadicNumber t = u.pow(e) - PadicNumber::from_integer(1, ctx);
  const long target = t.absolute_precision();
  if (t.is_zero()) return PadicNumber::zero(ctx, target);
  const long a = t.valuation();
  PadicNumber sum = PadicNumber::zero(ctx);
  PadicNumber power = t;
  for (long n = 1;; ++n) {
    long digits = 0;
    for (long q = n; q >= p; q /= p) ++digits;
    // n*a - floor(log_p n) is increasing in n, so the remaining tail lies below p^target.
    if (n * a - digits >= target) break;
    PadicNumber term = power / PadicNumber::from_integer(n, ctx);
    sum = (n % 2 == 1) ? sum + term : sum - term;
    power *= t;
  }
  return sum.with_absolute_precision(target) / PadicNumber::from_integer(e, ctx);
}

ChabautyPrime chabauty_prime(long m) {
  if (m < 2) throw DomainError("chabauty_prime: m must be >= 2");
  ChabautyPrime out;
  long q = m + 1;
  while (!is_prime(q)) q += m;
  out.prime = q;
  out.cap = ipow(2, static_cast<unsigned long>(euler_phi(m))) - 1;
  out.within_cap = Integer(q) <= out.cap;
  return out;
}

}  // namespace superchab
