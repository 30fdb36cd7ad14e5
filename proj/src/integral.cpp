#include "superchab/integral.hpp"

#include "superchab/errors.hpp"

namespace superchab {

namespace {

// Smallest L with p^L >= n.
long log_ceiling(long p, long n) {
  long L = 0;
  for (Integer pk = 1; pk < n; pk *= p) ++L;
  return L;
}

// v_p(n) <= L0 + (2/n0)(|n| - n0) for |n| >= n0, which keeps the divided tail affine.
TailBound divided_tail(const TailBound& t, long p, long n0, bool upper) {
  if (!t.present) return t;
  const Rational delta = frac(2, n0);
  const Rational offset = t.offset - log_ceiling(p, n0) + delta * n0;
  return TailBound::affine(offset, upper ? Rational(t.slope - delta) : Rational(t.slope + delta));
}

}  // namespace

Antiderivative formal_antiderivative(const LaurentSeries& omega) {
  const PadicContext& ctx = omega.context();
  const long lo = std::min(omega.low(), 0L);
  const long hi = std::max(omega.high(), 0L);
  std::vector<PadicNumber> coeffs;
  for (long n = lo; n <= hi; ++n) {
    coeffs.push_back(n == 0 ? PadicNumber(ctx)
                            : omega.coefficient(n) / PadicNumber::from_integer(n, ctx));
  }
  LaurentSeries F = LaurentSeries::from_coefficients(ctx, lo, std::move(coeffs), omega.domain(), omega.limit());
  F = F.with_tails(divided_tail(omega.lower_tail(), ctx.prime(), 1 - lo, false),
                   divided_tail(omega.upper_tail(), ctx.prime(), hi + 1, true));
  return {F, omega.coefficient(0)};
}

PadicNumber bc_integral(const LaurentSeries& omega, const PadicNumber& x, const PadicNumber& y) {
  if (!omega.domain().contains(x) || !omega.domain().contains(y)) {
    throw DomainError("integration endpoint outside the domain of the differential");
  }
  const auto [F, a0] = formal_antiderivative(omega);
  PadicNumber value = F.evaluate(y) - F.evaluate(x);
  if (!a0.is_exact_zero()) value += a0 * (iwasawa_log(y) - iwasawa_log(x));
  return value;
}

}  // namespace superchab
