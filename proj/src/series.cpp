#include "superchab/series.hpp"

#include <algorithm>
#include <sstream>

#include "superchab/errors.hpp"
#include "superchab/newton.hpp"

namespace superchab {

namespace {

// Lower bound on a valuation; nullopt stands for +infinity.
using Bound = std::optional<Rational>;

Bound coeff_floor(const PadicNumber& c) {
  if (c.is_exact_zero()) return std::nullopt;
  return Rational(c.valuation());
}

void take_min(Bound& acc, const Rational& v) {
  if (!acc || v < *acc) acc = v;
}

long ceil_long(const Rational& q) { return to_long(ceil_of(q)); }

PadicNumber cap(const PadicNumber& c, const Bound& err) {
  if (!err) return c;
  return c.with_absolute_precision(ceil_long(*err));
}

// Affine lower bound alpha + beta*n, valid for n >= start (upper side) or n <= start (lower side).
struct TailPiece {
  Rational alpha;
  Rational beta;
  long start;
};

}  // namespace

// ---------------------------------------------------------------------------
// AnnulusSpec

AnnulusSpec AnnulusSpec::disc() { return {Rational(0), std::nullopt, true}; }

AnnulusSpec AnnulusSpec::annulus(const Rational& beta) {
  if (beta <= 0) throw DomainError("annulus inner valuation must be positive");
  return {Rational(0), beta, false};
}

AnnulusSpec AnnulusSpec::between(const Rational& lo, const Rational& hi) {
  if (lo >= hi) throw DomainError("empty valuation interval");
  return {lo, hi, false};
}

AnnulusSpec AnnulusSpec::everywhere() { return {std::nullopt, std::nullopt, false}; }

bool AnnulusSpec::contains_valuation(const Rational& v) const {
  if (lower && !(v > *lower)) return false;
  if (upper && !(v < *upper)) return false;
  return true;
}

bool AnnulusSpec::contains(const PadicNumber& z) const {
  if (z.is_zero()) return contains_origin;
  return contains_valuation(Rational(z.valuation()));
}

AnnulusSpec AnnulusSpec::intersect(const AnnulusSpec& other) const {
  AnnulusSpec out;
  out.lower = lower;
  if (other.lower && (!out.lower || *other.lower > *out.lower)) out.lower = other.lower;
  out.upper = upper;
  if (other.upper && (!out.upper || *other.upper < *out.upper)) out.upper = other.upper;
  out.contains_origin = contains_origin && other.contains_origin;
  return out;
}

AnnulusSpec AnnulusSpec::reflected() const {
  AnnulusSpec out;
  if (upper) out.lower = Rational(-*upper);
  if (lower) out.upper = Rational(-*lower);
  out.contains_origin = false;
  return out;
}

// ---------------------------------------------------------------------------
// Assembly: clip a raw coefficient vector to the window and fold the rest into tails.

struct SeriesAssembler {
  static LaurentSeries build(const PadicContext& ctx, const AnnulusSpec& domain, long limit, long raw_lo,
                             std::vector<PadicNumber> raw, const std::vector<TailPiece>& upper,
                             const std::vector<TailPiece>& lower, long clip_lo, long clip_hi) {
    LaurentSeries out(ctx, domain, limit);
    if (raw.empty()) {
      raw.push_back(PadicNumber(ctx));
    }
    const long raw_hi = raw_lo + static_cast<long>(raw.size()) - 1;
    long lo = std::max(raw_lo, clip_lo);
    long hi = std::min(raw_hi, clip_hi);
    if (lo > hi) {
      lo = hi = (raw_lo > clip_hi) ? clip_hi : clip_lo;
    }

    std::vector<std::pair<long, Rational>> up_points, low_points;
    for (long n = std::max(hi + 1, raw_lo); n <= raw_hi; ++n) {
      if (auto f = coeff_floor(raw[n - raw_lo])) up_points.emplace_back(n, *f);
    }
    for (long n = raw_lo; n < std::min(lo, raw_hi + 1); ++n) {
      if (auto f = coeff_floor(raw[n - raw_lo])) low_points.emplace_back(n, *f);
    }

    // Point-only tails get the slope that converges on the whole domain.
    const Rational upper_default = domain.lower ? Rational(-*domain.lower) : Rational(0);
    const Rational lower_default = domain.upper ? Rational(-*domain.upper) : Rational(0);

    auto fold = [](const std::vector<TailPiece>& pieces, const std::vector<std::pair<long, Rational>>& points,
                   bool upper_side, const Rational& default_slope) {
      if (pieces.empty() && points.empty()) return TailBound::none();
      Rational s = default_slope;
      if (!pieces.empty()) {
        s = pieces.front().beta;
        for (const auto& pc : pieces) {
          if (upper_side ? pc.beta < s : pc.beta > s) s = pc.beta;
        }
      }
      Bound o;
      for (const auto& pc : pieces) take_min(o, pc.alpha + (pc.beta - s) * pc.start);
      for (const auto& [n, v] : points) take_min(o, v - s * n);
      return TailBound::affine(*o, s);
    };
    out.upper_ = fold(upper, up_points, true, upper_default);
    out.lower_ = fold(lower, low_points, false, lower_default);

    out.low_ = lo;
    out.coeffs_.assign(raw.begin() + (lo - raw_lo), raw.begin() + (hi - raw_lo) + 1);
    if (out.coeffs_.empty()) out.coeffs_.push_back(PadicNumber(ctx));

    while (out.coeffs_.size() > 1 && !out.lower_.present && out.coeffs_.front().is_exact_zero()) {
      out.coeffs_.erase(out.coeffs_.begin());
      ++out.low_;
    }
    while (out.coeffs_.size() > 1 && !out.upper_.present && out.coeffs_.back().is_exact_zero()) {
      out.coeffs_.pop_back();
    }
    return out;
  }

  static LaurentSeries build(const PadicContext& ctx, const AnnulusSpec& domain, long limit, long raw_lo,
                             std::vector<PadicNumber> raw, const std::vector<TailPiece>& upper,
                             const std::vector<TailPiece>& lower) {
    return build(ctx, domain, limit, raw_lo, std::move(raw), upper, lower, -limit, limit);
  }

  static std::vector<TailPiece> upper_pieces(const LaurentSeries& s) {
    if (!s.upper_.present) return {};
    return {{s.upper_.offset, s.upper_.slope, s.high() + 1}};
  }
  static std::vector<TailPiece> lower_pieces(const LaurentSeries& s) {
    if (!s.lower_.present) return {};
    return {{s.lower_.offset, s.lower_.slope, s.low() - 1}};
  }

  static LaurentSeries multiply(const LaurentSeries& a, const LaurentSeries& b);
  static LaurentSeries compose_monomial(const LaurentSeries& outer, const PadicNumber& c, long s,
                                        const AnnulusSpec& inner_domain);
  static LaurentSeries compose_polynomial(const LaurentSeries& outer, const LaurentSeries& inner);
  static LaurentSeries invert_upper(const LaurentSeries& a);
};

// ---------------------------------------------------------------------------
// Construction and access

LaurentSeries::LaurentSeries(const PadicContext& ctx, AnnulusSpec domain, long limit)
    : ctx_(ctx), domain_(std::move(domain)), limit_(limit), coeffs_{PadicNumber(ctx)} {
  if (limit < 1) throw DomainError("series truncation limit must be positive");
}

LaurentSeries LaurentSeries::from_coefficients(const PadicContext& ctx, long low, std::vector<PadicNumber> coeffs,
                                               AnnulusSpec domain, long limit) {
  for (const auto& c : coeffs) {
    if (!(c.context() == ctx)) throw DomainError("series coefficients from different contexts");
  }
  return SeriesAssembler::build(ctx, domain, limit, low, std::move(coeffs), {}, {});
}

LaurentSeries LaurentSeries::from_rationals(const PadicContext& ctx, const std::map<long, Rational>& coeffs,
                                            AnnulusSpec domain, long limit) {
  if (coeffs.empty()) return LaurentSeries(ctx, domain, limit);
  const long lo = coeffs.begin()->first;
  const long hi = coeffs.rbegin()->first;
  std::vector<PadicNumber> raw(hi - lo + 1, PadicNumber(ctx));
  for (const auto& [n, q] : coeffs) raw[n - lo] = PadicNumber::from_rational(q, ctx);
  return SeriesAssembler::build(ctx, domain, limit, lo, std::move(raw), {}, {});
}

LaurentSeries LaurentSeries::monomial(const PadicNumber& c, long exponent, AnnulusSpec domain, long limit) {
  return from_coefficients(c.context(), exponent, {c}, domain, limit);
}

PadicNumber LaurentSeries::coefficient(long n) const {
  if (n >= low_ && n <= high()) return coeffs_[n - low_];
  const TailBound& t = n > high() ? upper_ : lower_;
  if (!t.present) return PadicNumber(ctx_);
  return PadicNumber::zero(ctx_, ceil_long(t.at(n)));
}

bool LaurentSeries::is_polynomial() const {
  if (upper_.present || lower_.present) return false;
  return std::none_of(coeffs_.begin(), coeffs_.end(),
                      [](const PadicNumber& c) { return c.is_zero() && !c.is_exact_zero(); });
}

bool LaurentSeries::is_exact_zero() const {
  return !upper_.present && !lower_.present &&
         std::all_of(coeffs_.begin(), coeffs_.end(), [](const PadicNumber& c) { return c.is_exact_zero(); });
}

long LaurentSeries::zero_level(long lo, long hi) const {
  long level = kInfinity;
  for (long n = lo; n <= hi; ++n) level = std::min(level, coefficient(n).valuation());
  return level;
}

LaurentSeries LaurentSeries::with_domain(const AnnulusSpec& domain) const {
  LaurentSeries out = *this;
  out.domain_ = domain;
  return out;
}

LaurentSeries LaurentSeries::with_tails(const TailBound& lower, const TailBound& upper) const {
  LaurentSeries out = *this;
  out.lower_ = lower;
  out.upper_ = upper;
  return out;
}

LaurentSeries LaurentSeries::shifted(long k) const {
  std::vector<TailPiece> up, lo;
  if (upper_.present) up.push_back({upper_.offset - upper_.slope * k, upper_.slope, high() + 1 + k});
  if (lower_.present) lo.push_back({lower_.offset - lower_.slope * k, lower_.slope, low_ - 1 + k});
  return SeriesAssembler::build(ctx_, domain_, limit_, low_ + k, coeffs_, up, lo);
}

LaurentSeries LaurentSeries::reflected() const {
  std::vector<PadicNumber> raw(coeffs_.rbegin(), coeffs_.rend());
  std::vector<TailPiece> up, lo;
  if (lower_.present) up.push_back({lower_.offset, -lower_.slope, -(low_ - 1)});
  if (upper_.present) lo.push_back({upper_.offset, -upper_.slope, -(high() + 1)});
  return SeriesAssembler::build(ctx_, domain_.reflected(), limit_, -high(), std::move(raw), up, lo);
}

LaurentSeries LaurentSeries::truncated(long lo, long hi) const {
  return SeriesAssembler::build(ctx_, domain_, limit_, low_, coeffs_, SeriesAssembler::upper_pieces(*this),
                                SeriesAssembler::lower_pieces(*this), lo, hi);
}

bool LaurentSeries::converges_on(const AnnulusSpec& dom) const {
  if (upper_.present) {
    if (!dom.lower || upper_.slope + *dom.lower < 0) return false;
  }
  bool has_negative = lower_.present;
  for (long n = low_; n < 0 && n <= high(); ++n) {
    if (!coeffs_[n - low_].is_exact_zero()) has_negative = true;
  }
  if (dom.contains_origin && has_negative) return false;
  if (lower_.present) {
    if (!dom.upper || lower_.slope + *dom.upper > 0) return false;
  }
  return true;
}

PadicNumber LaurentSeries::evaluate(const PadicNumber& z) const {
  if (!(z.context() == ctx_)) throw DomainError("evaluation point from a different context");
  if (!domain_.contains(z)) throw DomainError("evaluation point outside the series domain");
  if (z.is_zero()) {
    if (!z.is_exact_zero()) throw PrecisionError("evaluation at an inexact zero");
    if (lower_.present) throw DomainError("series with a polar tail evaluated at 0");
    for (long n = low_; n < 0 && n <= high(); ++n) {
      if (!coeffs_[n - low_].is_exact_zero()) throw DomainError("series with a pole evaluated at 0");
    }
    return coefficient(0);
  }
  const Rational vz = z.valuation();
  Bound err;
  if (upper_.present) {
    const Rational rate = upper_.slope + vz;
    if (rate <= 0) throw DomainError("evaluation point outside the region of convergence");
    take_min(err, upper_.offset + rate * (high() + 1));
  }
  if (lower_.present) {
    const Rational rate = lower_.slope + vz;
    if (rate >= 0) throw DomainError("evaluation point outside the region of convergence");
    take_min(err, lower_.offset + rate * (low_ - 1));
  }
  PadicNumber sum(ctx_);
  PadicNumber power = z.pow(low_);
  for (const auto& c : coeffs_) {
    if (!c.is_exact_zero()) sum += c * power;
    power *= z;
  }
  return cap(sum, err);
}

// ---------------------------------------------------------------------------
// Ring operations

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  if (!(a.ctx_ == b.ctx_)) throw DomainError("series from different contexts");
  const long lo = std::min(a.low(), b.low());
  const long hi = std::max(a.high(), b.high());
  std::vector<PadicNumber> raw;
  raw.reserve(hi - lo + 1);
  for (long n = lo; n <= hi; ++n) raw.push_back(a.coefficient(n) + b.coefficient(n));
  auto up = SeriesAssembler::upper_pieces(a);
  for (const auto& pc : SeriesAssembler::upper_pieces(b)) up.push_back(pc);
  auto low = SeriesAssembler::lower_pieces(a);
  for (const auto& pc : SeriesAssembler::lower_pieces(b)) low.push_back(pc);
  return SeriesAssembler::build(a.ctx_, a.domain_.intersect(b.domain_), std::min(a.limit_, b.limit_), lo,
                                std::move(raw), up, low);
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) { return SeriesAssembler::multiply(a, b); }

LaurentSeries SeriesAssembler::multiply(const LaurentSeries& a, const LaurentSeries& b) {
  if (!(a.ctx_ == b.ctx_)) throw DomainError("series from different contexts");
  const PadicContext& ctx = a.ctx_;
  const long alo = a.low(), ahi = a.high(), blo = b.low(), bhi = b.high();
  const TailBound &Au = a.upper_, &Al = a.lower_, &Bu = b.upper_, &Bl = b.lower_;

  if ((Au.present && Bl.present && !(Au.slope > Bl.slope)) ||
      (Al.present && Bu.present && !(Al.slope < Bu.slope))) {
    throw DomainError("series product: no common annulus of convergence");
  }

  std::vector<Bound> fa, fb;
  for (const auto& c : a.coeffs_) fa.push_back(coeff_floor(c));
  for (const auto& c : b.coeffs_) fb.push_back(coeff_floor(c));

  const long raw_lo = alo + blo;
  const long raw_hi = ahi + bhi;
  std::vector<PadicNumber> raw(raw_hi - raw_lo + 1, PadicNumber(ctx));
  for (long i = alo; i <= ahi; ++i) {
    const PadicNumber& ai = a.coeffs_[i - alo];
    if (ai.is_exact_zero()) continue;
    for (long j = blo; j <= bhi; ++j) {
      const PadicNumber& bj = b.coeffs_[j - blo];
      if (bj.is_exact_zero()) continue;
      raw[i + j - raw_lo] += ai * bj;
    }
  }

  // Contributions to c_n from products involving at least one tail.
  auto tail_error = [&](long n) {
    Bound err;
    auto tail_times_window = [&](const TailBound& t, long edge, bool above, const std::vector<Bound>& fw,
                                 long wlo) {
      if (!t.present) return;
      for (long j = wlo; j < wlo + static_cast<long>(fw.size()); ++j) {
        if (!fw[j - wlo]) continue;
        const long i = n - j;
        if (above ? i > edge : i < edge) take_min(err, t.at(i) + *fw[j - wlo]);
      }
    };
    tail_times_window(Au, ahi, true, fb, blo);
    tail_times_window(Al, alo, false, fb, blo);
    tail_times_window(Bu, bhi, true, fa, alo);
    tail_times_window(Bl, blo, false, fa, alo);

    auto affine_on = [&](const TailBound& s, const TailBound& t, long i_from, long i_to) {
      // i in [i_from, i_to], terms s(i) + t(n - i).
      if (i_from > i_to) return;
      take_min(err, s.at(i_from) + t.at(n - i_from));
      take_min(err, s.at(i_to) + t.at(n - i_to));
    };
    if (Au.present && Bu.present) affine_on(Au, Bu, ahi + 1, n - bhi - 1);
    if (Al.present && Bl.present) affine_on(Al, Bl, n - blo + 1, alo - 1);
    if (Au.present && Bl.present) {
      const long i0 = std::max(ahi + 1, n - blo + 1);
      take_min(err, Au.at(i0) + Bl.at(n - i0));
    }
    if (Al.present && Bu.present) {
      const long i1 = std::min(alo - 1, n - bhi - 1);
      take_min(err, Al.at(i1) + Bu.at(n - i1));
    }
    return err;
  };
  for (long n = raw_lo; n <= raw_hi; ++n) raw[n - raw_lo] = cap(raw[n - raw_lo], tail_error(n));

  std::vector<TailPiece> up, low;
  auto window_pieces = [](const TailBound& t, const std::vector<Bound>& fw, long wlo, long start,
                          std::vector<TailPiece>& out) {
    if (!t.present) return;
    Bound alpha;
    for (long j = wlo; j < wlo + static_cast<long>(fw.size()); ++j) {
      if (fw[j - wlo]) take_min(alpha, t.offset - t.slope * j + *fw[j - wlo]);
    }
    if (alpha) out.push_back({*alpha, t.slope, start});
  };
  const long n_up = raw_hi + 1;
  const long n_low = raw_lo - 1;
  window_pieces(Au, fb, blo, n_up, up);
  window_pieces(Bu, fa, alo, n_up, up);
  window_pieces(Al, fb, blo, n_low, low);
  window_pieces(Bl, fa, alo, n_low, low);
  if (Au.present && Bu.present) {
    const Rational o = Au.offset + Bu.offset;
    up.push_back({o + (Au.slope - Bu.slope) * (ahi + 1), Bu.slope, n_up});
    up.push_back({o + (Bu.slope - Au.slope) * (bhi + 1), Au.slope, n_up});
  }
  if (Al.present && Bl.present) {
    const Rational o = Al.offset + Bl.offset;
    low.push_back({o + (Al.slope - Bl.slope) * (alo - 1), Bl.slope, n_low});
    low.push_back({o + (Bl.slope - Al.slope) * (blo - 1), Al.slope, n_low});
  }
  if (Au.present && Bl.present) {
    up.push_back({Au.offset + Bl.offset + (Au.slope - Bl.slope) * (1 - blo), Au.slope, n_up});
    low.push_back({Au.offset + Bl.offset + (Au.slope - Bl.slope) * (ahi + 1), Bl.slope, n_low});
  }
  if (Al.present && Bu.present) {
    up.push_back({Al.offset + Bu.offset + (Al.slope - Bu.slope) * (alo - 1), Bu.slope, n_up});
    low.push_back({Al.offset + Bu.offset - (Al.slope - Bu.slope) * (bhi + 1), Al.slope, n_low});
  }

  return build(ctx, a.domain_.intersect(b.domain_), std::min(a.limit_, b.limit_), raw_lo, std::move(raw), up, low);
}

LaurentSeries LaurentSeries::scaled(const PadicNumber& c) const { return *this * monomial(c, 0, domain_, limit_); }

LaurentSeries LaurentSeries::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  LaurentSeries result = monomial(PadicNumber::from_integer(1, ctx_), 0, domain_, limit_);
  LaurentSeries base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Reciprocal

LaurentSeries SeriesAssembler::invert_upper(const LaurentSeries& a) {
  const PadicContext& ctx = a.ctx_;
  const long lo = a.low();
  const long K = a.high() - lo;
  const PadicNumber& lead = a.coeffs_.front();
  if (lead.is_zero()) throw DomainError("reciprocal: leading coefficient not known to be nonzero");

  // g = a / (lead z^lo) = 1 + sum_{k>=1} g_k z^k with v(g_k) >= -lambda k.
  const PadicNumber inv_lead = lead.inverse();
  std::vector<PadicNumber> g;
  for (long k = 0; k <= K; ++k) g.push_back(a.coeffs_[k] * inv_lead);
  Bound lambda_b;
  auto raise = [&](const Rational& v) {
    if (!lambda_b || v > *lambda_b) lambda_b = v;
  };
  raise(Rational(0));
  for (long k = 1; k <= K; ++k) {
    if (auto f = coeff_floor(g[k])) raise(Rational(-*f / k));
  }
  if (a.upper_.present) {
    const Rational o = a.upper_.offset - lead.valuation() + a.upper_.slope * lo;
    const Rational s = a.upper_.slope;
    raise(Rational(-s));
    if (o < 0) raise(Rational(-s - o / (K + 1)));
  }
  const Rational lambda = *lambda_b;
  // The leading term dominates exactly where v(z) > lambda.
  AnnulusSpec dom = a.domain_;
  if (!dom.lower || *dom.lower < lambda) {
    if (dom.upper && *dom.upper <= lambda) {
      throw DomainError("reciprocal: leading term does not dominate on the domain");
    }
    dom.lower = lambda;
  }

  std::vector<PadicNumber> beta;
  beta.push_back(PadicNumber::from_integer(1, ctx));
  for (long n = 1; n <= K; ++n) {
    PadicNumber acc(ctx);
    for (long i = 1; i <= n; ++i) {
      if (!g[i].is_exact_zero()) acc += g[i] * beta[n - i];
    }
    beta.push_back(-acc);
  }
  std::vector<PadicNumber> raw;
  for (auto& b : beta) raw.push_back(b * inv_lead);
  // Beyond the computed window only the growth bound v(beta_n) >= -lambda n survives.
  std::vector<TailPiece> up{{Rational(-lead.valuation() - lambda * lo), Rational(-lambda), K + 1 - lo}};
  if (!a.upper_.present) {
    // Exact input: continue the recursion with g_k = 0 beyond K up to the limit.
    for (long n = K + 1; n - lo <= a.limit_; ++n) {
      PadicNumber acc(ctx);
      for (long i = 1; i <= std::min(n, K); ++i) {
        if (!g[i].is_exact_zero()) acc += g[i] * beta[n - i];
      }
      beta.push_back(-acc);
      raw.push_back(beta.back() * inv_lead);
    }
    up.back().start = static_cast<long>(beta.size()) - lo;
  }
  return build(ctx, dom, a.limit_, -lo, std::move(raw), up, {});
}

LaurentSeries LaurentSeries::inverse() const {
  std::vector<long> nonzero;
  for (long n = low_; n <= high(); ++n) {
    if (!coeffs_[n - low_].is_exact_zero()) nonzero.push_back(n);
  }
  if (nonzero.empty()) throw DomainError("reciprocal of the zero series");
  const bool upper_only = !lower_.present;
  const bool lower_only = !upper_.present;
  LaurentSeries trimmed = *this;
  if (upper_only) {
    trimmed = truncated(nonzero.front(), high());
    trimmed.lower_ = TailBound::none();
    return SeriesAssembler::invert_upper(trimmed);
  }
  if (lower_only) {
    return SeriesAssembler::invert_upper(reflected()).reflected();
  }
  throw DomainError("reciprocal: two-sided series has no dominant term");
}

// ---------------------------------------------------------------------------
// Composition

LaurentSeries SeriesAssembler::compose_monomial(const LaurentSeries& outer, const PadicNumber& c, long s,
                                                const AnnulusSpec& inner_domain) {
  const PadicContext& ctx = outer.ctx_;
  if (c.is_zero()) throw DomainError("composition with a vanishing monomial");
  if (s == 0) throw DomainError("composition with a constant inner series");
  const long blo = outer.low(), bhi = outer.high();
  const long raw_lo = s > 0 ? s * blo : s * bhi;
  const long raw_hi = s > 0 ? s * bhi : s * blo;
  std::vector<PadicNumber> raw(raw_hi - raw_lo + 1, PadicNumber(ctx));
  PadicNumber ck = c.pow(blo);
  for (long k = blo; k <= bhi; ++k) {
    const PadicNumber& bk = outer.coeffs_[k - blo];
    if (!bk.is_exact_zero()) raw[s * k - raw_lo] = bk * ck;
    ck *= c;
  }
  const Rational vc = c.valuation();
  std::vector<TailPiece> up, low;
  auto map_tail = [&](const TailBound& t, long edge) {
    if (!t.present) return;
    TailPiece pc{t.offset, (t.slope + vc) / s, s * edge};
    const bool lands_upper = (s > 0) == (edge > bhi);
    (lands_upper ? up : low).push_back(pc);
  };
  map_tail(outer.upper_, bhi + 1);
  map_tail(outer.lower_, blo - 1);

  // Preimage of the outer domain under v(X) = v(c) + s v(z).
  AnnulusSpec pre;
  auto image = [&](const Rational& v) { return Rational((v - vc) / s); };
  if (s > 0) {
    if (outer.domain_.lower) pre.lower = image(*outer.domain_.lower);
    if (outer.domain_.upper) pre.upper = image(*outer.domain_.upper);
    pre.contains_origin = outer.domain_.contains_origin;
  } else {
    if (outer.domain_.upper) pre.lower = image(*outer.domain_.upper);
    if (outer.domain_.lower) pre.upper = image(*outer.domain_.lower);
  }
  return build(ctx, inner_domain.intersect(pre), outer.limit_, raw_lo, std::move(raw), up, low);
}

namespace {

Rational hull_value(const std::vector<HullPoint>& hull, const Rational& x) {
  for (size_t i = 0; i + 1 < hull.size(); ++i) {
    const auto& [x0, y0] = hull[i];
    const auto& [x1, y1] = hull[i + 1];
    if (x >= x0 && x <= x1) return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
  }
  return hull.front().second;
}

Rational hull_slope(const std::vector<HullPoint>& hull, const Rational& x, bool right) {
  for (size_t i = 0; i + 1 < hull.size(); ++i) {
    const auto& [x0, y0] = hull[i];
    const auto& [x1, y1] = hull[i + 1];
    if (right ? (x >= x0 && x < x1) : (x > x0 && x <= x1)) return (y1 - y0) / (x1 - x0);
  }
  return 0;
}

}  // namespace

LaurentSeries SeriesAssembler::compose_polynomial(const LaurentSeries& outer, const LaurentSeries& inner) {
  const PadicContext& ctx = outer.ctx_;
  if (outer.lower_.present || outer.low() < 0) {
    throw DomainError("composition: outer series must be a power series");
  }
  if (inner.lower_.present || inner.upper_.present) {
    throw DomainError("composition: inner series must be a finite Laurent polynomial");
  }
  const AnnulusSpec& dom = inner.domain_;
  const long K = outer.high();
  const long limit = std::min(outer.limit_, inner.limit_);

  LaurentSeries acc = LaurentSeries::constant(outer.coefficient(K), dom, limit);
  for (long k = K - 1; k >= 0; --k) {
    acc = acc * inner + LaurentSeries::constant(outer.coefficient(k), dom, limit);
  }
  if (!outer.upper_.present) return acc;

  std::vector<HullPoint> pts;
  for (long n = inner.low(); n <= inner.high(); ++n) {
    if (auto f = coeff_floor(inner.coeffs_[n - inner.low()])) pts.emplace_back(n, *f);
  }
  if (pts.empty()) return acc;
  const auto hull = lower_convex_hull(pts);
  const long plo = hull.front().first, phi = hull.back().first;
  if (plo > 0 || phi < 0) throw DomainError("composition: inner polynomial must straddle the constant term");
  const Rational o = outer.upper_.offset;
  const Rational t = outer.upper_.slope;
  const Rational h0 = hull_value(hull, 0);
  if (!(t + h0 > 0)) throw DomainError("composition does not converge");

  // Terms k > K: v >= o + t k + k H(e/k), convex in k.
  auto scan = [&](long e) {
    long k = K + 1;
    if (e > 0 && phi > 0) k = std::max(k, to_long(ceil_of(frac(e, phi))));
    if (e < 0 && plo < 0) k = std::max(k, to_long(ceil_of(frac(e, plo))));
    Bound best;
    for (long steps = 0;; ++k, ++steps) {
      if (steps > 1000000) throw PrecisionError("composition error scan did not settle");
      const Rational x = frac(e, k);
      if (x < plo || x > phi) {
        if (best) break;
        continue;
      }
      const Rational val = o + t * k + k * hull_value(hull, x);
      if (best && val >= *best) break;
      best = val;
    }
    return best;
  };
  const long lo = acc.low(), hi = acc.high();
  std::vector<PadicNumber> raw;
  for (long e = lo; e <= hi; ++e) raw.push_back(cap(acc.coefficient(e), scan(e)));
  std::vector<TailPiece> up_all = upper_pieces(acc), low_all = lower_pieces(acc);
  if (phi > 0) up_all.push_back({o, hull_slope(hull, 0, true) + (t + h0) / phi, 1});
  if (plo < 0) low_all.push_back({o, hull_slope(hull, 0, false) + (t + h0) / plo, -1});
  return build(ctx, dom, limit, lo, std::move(raw), up_all, low_all);
}

LaurentSeries LaurentSeries::compose(const LaurentSeries& inner) const {
  if (!(ctx_ == inner.ctx_)) throw DomainError("series from different contexts");
  if (!inner.lower_.present && !inner.upper_.present) {
    std::vector<long> nonzero;
    for (long n = inner.low_; n <= inner.high(); ++n) {
      if (!inner.coeffs_[n - inner.low_].is_exact_zero()) nonzero.push_back(n);
    }
    if (nonzero.size() == 1 && nonzero.front() != 0) {
      return SeriesAssembler::compose_monomial(*this, inner.coefficient(nonzero.front()), nonzero.front(),
                                               inner.domain_);
    }
    return SeriesAssembler::compose_polynomial(*this, inner);
  }
  throw DomainError("composition: inner series must be a finite Laurent polynomial");
}

LaurentSeries combine(const LaurentSeries& a, const LaurentSeries& b, CombineKind kind) {
  switch (kind) {
    case CombineKind::multiply:
      return a * b;
    case CombineKind::invert_first:
      return a.inverse() * b;
    case CombineKind::compose:
      return b.compose(a);
  }
  throw DomainError("unknown combine kind");
}

std::string LaurentSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (long n = low_; n <= high(); ++n) {
    const PadicNumber& c = coeffs_[n - low_];
    if (c.is_exact_zero()) continue;
    if (!first) os << " + ";
    os << "(" << c.to_string() << ")*z^" << n;
    first = false;
  }
  if (first) os << "0";
  if (upper_.present) os << " + [v >= " << to_fraction_string(upper_.offset) << " + " << to_fraction_string(upper_.slope) << "n, n > " << high() << "]";
  if (lower_.present) os << " + [v >= " << to_fraction_string(lower_.offset) << " + " << to_fraction_string(lower_.slope) << "n, n < " << low_ << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// Binomial series

Rational binomial_coefficient(const Rational& alpha, long k) {
  Rational c = 1;
  for (long i = 0; i < k; ++i) {
    c *= (alpha - i);
    c /= (i + 1);
  }
  return c;
}

LaurentSeries binomial_series(const PadicNumber& theta, const Rational& alpha, SeriesSide side, long order,
                              long limit) {
  const PadicContext& ctx = theta.context();
  const long p = ctx.prime();
  if (theta.is_zero()) throw DomainError("binomial series centred at zero");
  if (alpha.get_den() % p == 0) throw DomainError("p divides the denominator of the binomial exponent");
  if (order < 0) throw DomainError("negative series order");
  const PadicNumber ratio = side == SeriesSide::minus ? -theta.inverse() : -theta;
  std::vector<PadicNumber> coeffs;
  PadicNumber power = PadicNumber::from_integer(1, ctx);
  Rational binom = 1;
  for (long k = 0; k <= order; ++k) {
    coeffs.push_back(PadicNumber::from_rational(binom, ctx) * power);
    binom *= (alpha - k);
    binom /= (k + 1);
    power *= ratio;
  }
  const Rational vt = theta.valuation();
  if (side == SeriesSide::minus) {
    AnnulusSpec dom{vt, std::nullopt, true};
    return SeriesAssembler::build(ctx, dom, limit, 0, std::move(coeffs), {{Rational(0), Rational(-vt), order + 1}},
                                  {});
  }
  std::reverse(coeffs.begin(), coeffs.end());
  AnnulusSpec dom{std::nullopt, vt, false};
  return SeriesAssembler::build(ctx, dom, limit, -order, std::move(coeffs), {},
                                {{Rational(0), Rational(-vt), -order - 1}});
}

LaurentSeries branch_root_series(const PadicNumber& theta, long m, SeriesSide side, long order, long limit) {
  if (m <= 0) throw DomainError("root index must be positive");
  if (m % theta.prime() == 0) throw DomainError("coprimality violated: p divides m");
  return binomial_series(theta, frac(1, m), side, order, limit);
}

}  // namespace superchab
