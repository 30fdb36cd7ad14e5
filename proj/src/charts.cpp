#include "superchab/charts.hpp"

#include <numeric>

#include "superchab/errors.hpp"

namespace superchab {

std::string to_string(ChartVerdict v) {
  switch (v) {
    case ChartVerdict::charted:
      return "charted";
    case ChartVerdict::no_points:
      return "no_points";
    case ChartVerdict::unparameterized:
      return "unparameterized";
    case ChartVerdict::excluded:
      return "excluded";
  }
  return "unknown";
}

namespace {

PadicNumber p_power(long v, const PadicContext& ctx) {
  const Integer pk = pow_p(ctx.prime(), std::labs(v));
  return PadicNumber::from_rational(v >= 0 ? Rational(pk) : frac(1, pk), ctx);
}

PadicNumber one(const PadicContext& ctx) { return PadicNumber::from_integer(1, ctx); }

LaurentSeries apply_polynomial(const Polynomial& f, const LaurentSeries& x) {
  const PadicContext& ctx = x.context();
  LaurentSeries acc = LaurentSeries::constant(PadicNumber::from_rational(f.leading(), ctx), x.domain(), x.limit());
  for (long i = f.degree() - 1; i >= 0; --i) {
    acc = acc * x + LaurentSeries::constant(PadicNumber::from_rational(f.coefficient(i), ctx), x.domain(), x.limit());
  }
  return acc;
}

// Least u in [1, p) with base * u^e an m-th power.
std::optional<long> find_unit(const PadicNumber& base, long e, long m) {
  const PadicContext& ctx = base.context();
  for (long u = 1; u < ctx.prime(); ++u) {
    if (is_mth_power(base * PadicNumber::from_integer(u, ctx).pow(e), m)) return u;
  }
  return std::nullopt;
}

void require_precision(long attained, const PadicContext& ctx, const char* what) {
  if (attained < (ctx.precision() + 1) / 2) {
    throw VerificationError(std::string(what) + ": y^m - f(x) vanishes only to " + std::to_string(attained) +
                            " digits");
  }
}

}  // namespace

long chart_residual(const SuperellipticCurve& curve, const ChartMap& chart) {
  const LaurentSeries residual = chart.y.pow(curve.m()) - apply_polynomial(curve.f(), chart.x);
  const long w = chart.y.limit() / 2;
  return residual.zero_level(-w, w);
}

AnnulusCharts parameterize_annulus(const SuperellipticCurve& curve, const BranchLocus& locus,
                                   const ResidueAnnulus& annulus, const PadicContext& ctx, long limit) {
  if (!locus.complete()) throw DomainError("branch locus does not split over Q_p");
  const long m = curve.m();
  AnnulusCharts out;
  out.d = annulus.d;
  const long md = m / annulus.d;
  const long n0d = annulus.n0 / annulus.d;
  out.inner_exponent = md;

  const PadicNumber c0 = annulus.center;
  const PadicNumber scale = p_power(annulus.v_lo, ctx);
  auto rescaled = [&](size_t i) { return (locus.points[i].theta - c0) / scale; };

  PadicNumber K = PadicNumber::from_rational(curve.leading(), ctx) * scale.pow(curve.degree());
  for (size_t i : annulus.theta_inf) K *= (-rescaled(i)).pow(locus.points[i].multiplicity);

  if (out.d > 1 && !is_mth_power(K, out.d)) {
    out.verdict = ChartVerdict::no_points;
    out.detail = "K = " + K.to_string() + " is not a " + std::to_string(out.d) + "-th power";
    return out;
  }
  const auto u = find_unit(K, out.d, m);
  if (!u) {
    out.verdict = ChartVerdict::unparameterized;
    out.detail = "no unit u < p makes u^d K an m-th power";
    return out;
  }
  out.unit = *u;
  const PadicNumber uu = PadicNumber::from_integer(*u, ctx);
  out.gamma = mth_root(K * uu.pow(out.d), m);

  // U^(n0) = u^(d + n m) keeps y^m = f(x) exact.
  const long inv = md == 1 ? 0 : to_long(mod_inverse(n0d, md));
  const long n = (n0d * inv - 1) / md;
  const PadicNumber U = uu.pow(inv);
  const PadicNumber gamma = *out.gamma * uu.pow(n);
  out.tau_rotation = (out.d * inv) % m;

  const long width = annulus.v_hi - annulus.v_lo;
  const AnnulusSpec xdom = AnnulusSpec::between(0, width);
  out.domain = AnnulusSpec::between(0, frac(width, md));

  LaurentSeries h = LaurentSeries::constant(one(ctx), xdom, limit);
  for (size_t i : annulus.theta0) {
    const PadicNumber t = rescaled(i);
    if (t.is_exact_zero()) continue;
    h = h * binomial_series(t, frac(locus.points[i].multiplicity, m), SeriesSide::plus, limit, limit);
  }
  for (size_t i : annulus.theta_inf) {
    h = h * binomial_series(rescaled(i), frac(locus.points[i].multiplicity, m), SeriesSide::minus, limit, limit);
  }
  const LaurentSeries hz = h.compose(LaurentSeries::monomial(U, md, out.domain, limit)).shifted(n0d);
  const LaurentSeries xz = LaurentSeries::constant(c0, out.domain, limit) +
                           LaurentSeries::monomial(scale * U, md, out.domain, limit);

  const PadicNumber zeta = primitive_root_of_unity(m, ctx);
  out.attained = kInfinity;
  for (long j = 0; j < out.d; ++j) {
    ChartMap chart{j, xz, hz.scaled(gamma * zeta.pow(j)), 0};
    chart.attained = chart_residual(curve, chart);
    out.attained = std::min(out.attained, chart.attained);
    out.charts.push_back(std::move(chart));
  }
  require_precision(out.attained, ctx, "annulus chart");
  out.verdict = ChartVerdict::charted;
  return out;
}

TauImage tau_image(const AnnulusCharts& charts, long sheet, long m, const PadicContext& ctx) {
  if (sheet < 0 || sheet >= charts.d) throw DomainError("sheet index out of range");
  if (sheet + 1 < charts.d) return {sheet + 1, one(ctx)};
  return {0, primitive_root_of_unity(m, ctx).pow(charts.tau_rotation)};
}

DiscCharts parameterize_disc(const SuperellipticCurve& curve, const BranchLocus& locus, const DiscSpec& disc,
                             const PadicContext& ctx, long limit) {
  if (!locus.complete()) throw DomainError("branch locus does not split over Q_p");
  const long m = curve.m();
  std::vector<size_t> inside, outside;
  for (size_t i = 0; i < locus.points.size(); ++i) {
    ((locus.points[i].theta - disc.center).valuation() > disc.radius ? inside : outside).push_back(i);
  }
  DiscCharts out;
  out.case_number = static_cast<int>(inside.size());
  if (inside.size() > 2) throw DomainError("disc contains more than two branch points");
  const PadicNumber scale = p_power(disc.radius, ctx);
  const PadicNumber lead = PadicNumber::from_rational(curve.leading(), ctx) * scale.pow(curve.degree());

  // Product over outside points of (1 - X/theta')^(n/m), with theta' measured from `origin`.
  auto outer_factor = [&](const PadicNumber& origin, const AnnulusSpec& xdom, PadicNumber& K) {
    LaurentSeries h = LaurentSeries::constant(one(ctx), xdom, limit);
    for (size_t i : outside) {
      const PadicNumber t = (locus.points[i].theta - origin) / scale;
      K *= (-t).pow(locus.points[i].multiplicity);
      h = h * binomial_series(t, frac(locus.points[i].multiplicity, m), SeriesSide::minus, limit, limit);
    }
    return h;
  };
  const PadicNumber zeta = primitive_root_of_unity(m, ctx);
  auto finish = [&](const char* what) {
    out.attained = kInfinity;
    for (auto& c : out.charts) {
      c.attained = chart_residual(curve, c);
      out.attained = std::min(out.attained, c.attained);
    }
    require_precision(out.attained, ctx, what);
    out.verdict = ChartVerdict::charted;
    return out;
  };

  if (inside.empty()) {
    out.domain = AnnulusSpec::disc();
    PadicNumber K = lead;
    const LaurentSeries h = outer_factor(disc.center, out.domain, K);
    if (!is_mth_power(K, m)) {
      out.verdict = ChartVerdict::no_points;
      out.detail = "f(center) is not an m-th power";
      return out;
    }
    const PadicNumber gamma = mth_root(K, m);
    const LaurentSeries x = LaurentSeries::constant(disc.center, out.domain, limit) +
                            LaurentSeries::monomial(scale, 1, out.domain, limit);
    for (long j = 0; j < m; ++j) out.charts.push_back({j, x, h.scaled(gamma * zeta.pow(j)), 0});
    return finish("disc chart");
  }

  if (inside.size() == 1) {
    const BranchPoint& b = locus.points[inside.front()];
    if (std::gcd(b.multiplicity, m) != 1) throw DomainError("branch multiplicity shares a factor with m");
    out.domain = AnnulusSpec::disc();
    PadicNumber K = lead;
    const LaurentSeries h = outer_factor(b.theta, AnnulusSpec::disc(), K);
    const auto u = find_unit(K, b.multiplicity, m);
    if (!u) {
      out.verdict = ChartVerdict::unparameterized;
      out.detail = "v(K) = " + std::to_string(K.valuation()) + " is not divisible by m";
      return out;
    }
    const PadicNumber U = PadicNumber::from_integer(*u, ctx);
    const PadicNumber gamma = mth_root(K * U.pow(b.multiplicity), m);
    const LaurentSeries X = LaurentSeries::monomial(U, m, out.domain, limit);
    const LaurentSeries x = LaurentSeries::constant(b.theta, out.domain, limit) + X.scaled(scale);
    out.charts.push_back({0, x, h.compose(X).shifted(b.multiplicity).scaled(gamma), 0});
    return finish("disc chart");
  }

  if (m != 2) {
    out.verdict = ChartVerdict::excluded;
    out.detail = "two branch points in one disc need m = 2";
    return out;
  }
  const PadicNumber& t1 = locus.points[inside[0]].theta;
  const PadicNumber& t2 = locus.points[inside[1]].theta;
  const PadicNumber two = PadicNumber::from_integer(2, ctx);
  const PadicNumber center = (t1 + t2) / two;
  const PadicNumber delta = (t1 - t2) / (two * scale);
  out.a = delta * delta;
  const PadicNumber quarter_a = *out.a / PadicNumber::from_integer(4, ctx);
  out.domain = AnnulusSpec::between(0, out.a->valuation());
  PadicNumber K = lead;
  const LaurentSeries h = outer_factor(center, AnnulusSpec::disc(), K);
  if (!is_mth_power(K, 2)) {
    out.verdict = ChartVerdict::no_points;
    out.detail = "leading constant is not a square";
    return out;
  }
  const PadicNumber gamma = mth_root(K, 2);
  const LaurentSeries z = LaurentSeries::monomial(one(ctx), 1, out.domain, limit);
  const LaurentSeries w = LaurentSeries::monomial(quarter_a, -1, out.domain, limit);
  const LaurentSeries X = z + w;
  const LaurentSeries x = LaurentSeries::constant(center, out.domain, limit) + X.scaled(scale);
  out.charts.push_back({0, x, (h.compose(X) * (z - w)).scaled(gamma), 0});
  return finish("disc chart");
}

}  // namespace superchab
