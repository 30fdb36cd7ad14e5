#include "superchab/integer.hpp"

#include <stdexcept>

#include "superchab/errors.hpp"

namespace superchab {

HypothesisError::HypothesisError(std::vector<std::string> violated)
    : Error([&] {
        std::string msg = "hypothesis violated:";
        for (const auto& v : violated) msg += " [" + v + "]";
        return msg;
      }()),
      violated_(std::move(violated)) {}

ParseError::ParseError(const std::string& message, int line, int column)
    : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " +
            message),
      line_(line),
      column_(column) {}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Integer pow_p(long p, long k) {
  if (k < 0) throw std::invalid_argument("pow_p: negative exponent");
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
  return out;
}

long valuation(const Integer& n, long p) {
  if (n == 0) return kInfinity;
  Integer tmp = abs(n);
  Integer pp = p;
  return static_cast<long>(mpz_remove(tmp.get_mpz_t(), tmp.get_mpz_t(), pp.get_mpz_t()));
}

long valuation(const Rational& q, long p) {
  if (q == 0) return kInfinity;
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

Integer strip_p(const Integer& n, long p) {
  if (n == 0) return n;
  Integer tmp = n;
  Integer pp = p;
  mpz_remove(tmp.get_mpz_t(), tmp.get_mpz_t(), pp.get_mpz_t());
  return tmp;
}

Integer mod_positive(const Integer& a, const Integer& modulus) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

Integer mod_inverse(const Integer& a, const Integer& modulus) {
  if (modulus == 1) return 0;
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t()) == 0) {
    throw DomainError("mod_inverse: element not invertible");
  }
  return r;
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

long to_long(const Integer& n) {
  if (!n.fits_slong_p()) throw std::overflow_error("integer does not fit in long");
  return n.get_si();
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

long euler_phi(long n) {
  long result = n;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      result -= result / d;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::string to_fraction_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_fraction(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("not an exact rational: " + text);
  }
  q.canonicalize();
  return q;
}

}  // namespace superchab
