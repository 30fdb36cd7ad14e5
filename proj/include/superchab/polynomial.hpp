#pragma once

#include <string>
#include <vector>

#include "superchab/padic.hpp"

namespace superchab {

// Dense polynomial over Q, coefficients in ascending degree, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial monomial(const Rational& c, long degree);
  static Polynomial linear_root(const Rational& theta);  // x - theta

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(long i) const;
  Rational leading() const;

  Rational evaluate(const Rational& x) const;
  PadicNumber evaluate(const PadicNumber& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;
  Polynomial shifted(const Rational& t) const;  // f(x + t)
  Polynomial reversed(long n) const;            // x^n f(1/x), needs n >= degree
  Polynomial pow(long k) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  Polynomial scaled(const Rational& c) const;

  // Quotient and remainder by a nonzero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;

  // Primitive integer multiple (positive leading coefficient).
  std::vector<Integer> primitive_integer() const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial gcd(const Polynomial& a, const Polynomial& b);  // monic, gcd(0, 0) = 0

struct SquareFreePart {
  Polynomial factor;  // monic, squarefree
  long multiplicity;
};

// Yun's algorithm: f = lc * prod factor^multiplicity, factors pairwise coprime.
std::vector<SquareFreePart> square_free_decomposition(const Polynomial& f);

// Distinct rational roots.
std::vector<Rational> rational_roots(const Polynomial& f);

struct PadicRoots {
  std::vector<PadicNumber> roots;
  bool complete = false;  // all degree-many roots lie in Q_p
};

// Roots in Q_p of a squarefree polynomial, to the context precision.
PadicRoots padic_roots(const Polynomial& f, const PadicContext& ctx);

}  // namespace superchab
