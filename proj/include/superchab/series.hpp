#pragma once

#include <map>
#include <optional>
#include <vector>

#include "superchab/padic.hpp"

namespace superchab {

// Region of C_p described by valuations: lower < v(z) < upper, optionally with z = 0.
struct AnnulusSpec {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
  bool contains_origin = false;

  static AnnulusSpec disc();                                   // |z| < 1
  static AnnulusSpec annulus(const Rational& beta);            // 0 < v(z) < beta
  static AnnulusSpec between(const Rational& lo, const Rational& hi);
  static AnnulusSpec everywhere();                             // punctured line

  bool is_disc() const { return contains_origin; }
  bool contains_valuation(const Rational& v) const;
  bool contains(const PadicNumber& z) const;
  AnnulusSpec intersect(const AnnulusSpec& other) const;
  AnnulusSpec reflected() const;  // image under z -> 1/z
};

// Lower bound v(a_n) >= offset + slope * n for every exponent beyond one edge of the window.
struct TailBound {
  bool present = false;
  Rational offset = 0;
  Rational slope = 0;

  static TailBound none() { return {}; }
  static TailBound affine(const Rational& offset, const Rational& slope) { return {true, offset, slope}; }
  Rational at(long n) const { return offset + slope * n; }
};

enum class SeriesSide { minus, plus };
enum class CombineKind { multiply, invert_first, compose };

// Truncated Laurent series with rigorous error bookkeeping.
//
// The window [low, high] holds coefficients, each with its own p-adic precision.
// Exponents outside the window are either absent or controlled by a TailBound.
// Every operation keeps the window inside [-limit, limit] and folds whatever it
// drops into the tail bounds, so the represented set of series always contains
// the exact result.
class LaurentSeries {
 public:
  static constexpr long kDefaultLimit = 64;

  explicit LaurentSeries(const PadicContext& ctx, AnnulusSpec domain = AnnulusSpec::everywhere(),
                         long limit = kDefaultLimit);  // exact zero

  static LaurentSeries from_coefficients(const PadicContext& ctx, long low, std::vector<PadicNumber> coeffs,
                                         AnnulusSpec domain = AnnulusSpec::everywhere(),
                                         long limit = kDefaultLimit);
  static LaurentSeries from_rationals(const PadicContext& ctx, const std::map<long, Rational>& coeffs,
                                      AnnulusSpec domain = AnnulusSpec::everywhere(),
                                      long limit = kDefaultLimit);
  static LaurentSeries monomial(const PadicNumber& c, long exponent,
                                AnnulusSpec domain = AnnulusSpec::everywhere(), long limit = kDefaultLimit);
  static LaurentSeries constant(const PadicNumber& c, AnnulusSpec domain = AnnulusSpec::everywhere(),
                                long limit = kDefaultLimit) {
    return monomial(c, 0, domain, limit);
  }

  const PadicContext& context() const { return ctx_; }
  const AnnulusSpec& domain() const { return domain_; }
  long limit() const { return limit_; }
  long low() const { return low_; }
  long high() const { return low_ + static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<PadicNumber>& window() const { return coeffs_; }
  const TailBound& upper_tail() const { return upper_; }
  const TailBound& lower_tail() const { return lower_; }

  // Outside the window: exact zero, or a zero known to the tail bound.
  PadicNumber coefficient(long n) const;

  // No tails and no inexact zeros: a finite Laurent polynomial up to coefficient precision.
  bool is_polynomial() const;
  bool is_exact_zero() const;

  // Smallest coefficient valuation over exponents in [lo, hi] (zeros count at their precision).
  long zero_level(long lo, long hi) const;

  LaurentSeries with_domain(const AnnulusSpec& domain) const;
  LaurentSeries with_tails(const TailBound& lower, const TailBound& upper) const;
  LaurentSeries shifted(long k) const;  // multiplied by z^k
  LaurentSeries reflected() const;      // z -> 1/z
  LaurentSeries truncated(long lo, long hi) const;

  // Tails converge at every point of the domain.
  bool converges_on(const AnnulusSpec& domain) const;

  PadicNumber evaluate(const PadicNumber& z) const;

  LaurentSeries operator-() const;
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  LaurentSeries scaled(const PadicNumber& c) const;
  LaurentSeries pow(long k) const;

  // Reciprocal of a one-sided series whose extreme term dominates on the domain.
  LaurentSeries inverse() const;
  // this(inner(z)); inner is either c*z^s or, for a power series, a finite Laurent polynomial.
  LaurentSeries compose(const LaurentSeries& inner) const;

  std::string to_string() const;

 private:
  friend struct SeriesAssembler;

  PadicContext ctx_;
  AnnulusSpec domain_;
  long limit_;
  long low_ = 0;
  std::vector<PadicNumber> coeffs_;
  TailBound lower_;
  TailBound upper_;
};

LaurentSeries combine(const LaurentSeries& a, const LaurentSeries& b, CombineKind kind);

// Binomial expansion of (1 - x/theta)^alpha (side minus, power series on v(x) > v(theta))
// or (1 - theta/x)^alpha (side plus, series in 1/x on v(x) < v(theta)), terms 0..order.
LaurentSeries binomial_series(const PadicNumber& theta, const Rational& alpha, SeriesSide side, long order,
                              long limit = LaurentSeries::kDefaultLimit);
LaurentSeries branch_root_series(const PadicNumber& theta, long m, SeriesSide side, long order,
                                 long limit = LaurentSeries::kDefaultLimit);

Rational binomial_coefficient(const Rational& alpha, long k);

}  // namespace superchab
