#include <gtest/gtest.h>

#include "superchab/errors.hpp"
#include "superchab/integral.hpp"
#include "superchab/newton.hpp"
#include "superchab/polynomial.hpp"
#include "superchab/series.hpp"
#include "support.hpp"

using namespace superchab;
using superchab::testing::Gen;

namespace {

PadicNumber Q(const Rational& q, const PadicContext& ctx) { return PadicNumber::from_rational(q, ctx); }

LaurentSeries poly_series(const Polynomial& f, const PadicContext& ctx, AnnulusSpec dom = AnnulusSpec::everywhere()) {
  std::map<long, Rational> coeffs;
  for (long i = 0; i <= f.degree(); ++i) coeffs[i] = f.coefficient(i);
  return LaurentSeries::from_rationals(ctx, coeffs, dom);
}

LaurentSeries random_laurent(Gen& gen, const PadicContext& ctx, long lo, long hi) {
  std::map<long, Rational> coeffs;
  for (long n = lo; n <= hi; ++n) {
    if (gen.coin()) coeffs[n] = gen.rational(50);
  }
  coeffs[gen.range(lo, hi)] = gen.nonzero(1, 50);
  return LaurentSeries::from_rationals(ctx, coeffs);
}

}  // namespace

TEST(BranchSeries, FirstCoefficients) {
  const PadicContext ctx(7, 20);
  for (long theta : {1L, 2L, -3L, 7L}) {
    const auto s = branch_root_series(Q(theta, ctx), 3, SeriesSide::minus, 12);
    EXPECT_TRUE(s.coefficient(0).congruent(Q(1, ctx), 20));
    EXPECT_TRUE(s.coefficient(1).congruent(Q(frac(-1, 3 * theta), ctx), 18));
  }
  EXPECT_THROW(branch_root_series(Q(1, ctx), 7, SeriesSide::minus, 5), DomainError);
  EXPECT_THROW(branch_root_series(PadicNumber(ctx), 3, SeriesSide::minus, 5), DomainError);
}

TEST(BranchSeries, DefiningIdentity) {
  const PadicContext ctx(7, 20);
  const auto minus = branch_root_series(Q(1, ctx), 3, SeriesSide::minus, 12).pow(3);
  EXPECT_TRUE(minus.coefficient(0).congruent(Q(1, ctx), 18));
  EXPECT_TRUE(minus.coefficient(1).congruent(Q(-1, ctx), 18));
  for (long n = 2; n <= 12; ++n) EXPECT_GE(minus.coefficient(n).valuation(), 18) << n;

  // (1 - theta/x) with theta = 7 in powers of 1/x.
  const auto plus = branch_root_series(Q(7, ctx), 3, SeriesSide::plus, 12).pow(3);
  EXPECT_TRUE(plus.coefficient(0).congruent(Q(1, ctx), 18));
  EXPECT_TRUE(plus.coefficient(-1).congruent(Q(-7, ctx), 18));
  for (long n = -12; n <= -2; ++n) EXPECT_GE(plus.coefficient(n).valuation(), 18) << n;
}

TEST(Combine, Examples) {
  const PadicContext ctx(7, 20);
  const auto f = branch_root_series(Q(1, ctx), 3, SeriesSide::minus, 20);
  const auto one = LaurentSeries::constant(Q(1, ctx));
  const auto same = combine(f, one, CombineKind::multiply);
  for (long n = 0; n <= 20; ++n) EXPECT_TRUE(same.coefficient(n).congruent(f.coefficient(n), 20));

  const auto g = LaurentSeries::from_rationals(ctx, {{0, 1}, {1, -1}}, AnnulusSpec::disc());
  const auto geo = combine(g, one, CombineKind::invert_first);
  for (long n = 0; n <= 30; ++n) EXPECT_TRUE(geo.coefficient(n).congruent(Q(1, ctx), 20)) << n;

  const auto inner = LaurentSeries::monomial(Q(7, ctx), 1, AnnulusSpec::disc());
  const auto composed = combine(inner, f, CombineKind::compose);
  EXPECT_TRUE(composed.coefficient(0).congruent(Q(1, ctx), 20));
  EXPECT_TRUE(composed.coefficient(1).congruent(Q(frac(-7, 3), ctx), 20));
}

TEST(Combine, DisjointDomainsAreRejected) {
  const PadicContext ctx(7, 20);
  const auto small = branch_root_series(Q(7, ctx), 3, SeriesSide::minus, 10);  // v(x) > 1
  const auto large = branch_root_series(Q(1, ctx), 3, SeriesSide::plus, 10);   // v(x) < 0
  EXPECT_THROW(small * large, DomainError);
}

TEST(Combine, OverflowFoldsIntoTail) {
  const PadicContext ctx(7, 20);
  const auto f = branch_root_series(Q(7, ctx), 3, SeriesSide::minus, 60);
  const auto sq = f * f;
  EXPECT_LE(sq.high(), sq.limit());
  ASSERT_TRUE(sq.upper_tail().present);
  // The folded tail still converges wherever f does.
  EXPECT_TRUE(sq.converges_on(AnnulusSpec::between(1, 5)));
}

TEST(Antiderivative, Examples) {
  const PadicContext ctx(7, 20);
  {
    const auto [F, a0] = formal_antiderivative(LaurentSeries::constant(Q(1, ctx)));
    EXPECT_TRUE(F.is_exact_zero());
    EXPECT_TRUE(a0.congruent(Q(1, ctx), 20));
  }
  {
    const auto [F, a0] = formal_antiderivative(LaurentSeries::monomial(Q(1, ctx), 1));
    EXPECT_TRUE(F.coefficient(1).congruent(Q(1, ctx), 20));
    EXPECT_TRUE(a0.is_exact_zero());
  }
  {
    const auto w = LaurentSeries::from_rationals(ctx, {{2, 3}, {-1, 1}});
    const auto [F, a0] = formal_antiderivative(w);
    EXPECT_TRUE(F.coefficient(2).congruent(Q(frac(3, 2), ctx), 20));
    EXPECT_TRUE(F.coefficient(-1).congruent(Q(-1, ctx), 20));
    EXPECT_TRUE(a0.is_exact_zero());
  }
}

TEST(Antiderivative, RoundTripProperty) {
  Gen gen(21);
  const PadicContext ctx(5, 20);
  for (int i = 0; i < 300; ++i) {
    const auto w = random_laurent(gen, ctx, -8, 8);
    const auto [F, a0] = formal_antiderivative(w);
    EXPECT_TRUE(a0.congruent(w.coefficient(0), a0.absolute_precision()));
    for (long n = -8; n <= 8; ++n) {
      if (n == 0) continue;
      const auto back = F.coefficient(n) * PadicNumber::from_integer(n, ctx);
      EXPECT_TRUE(back.congruent(w.coefficient(n), std::min(back.absolute_precision(), 18L))) << n;
    }
  }
}

TEST(BcIntegral, Examples) {
  const PadicContext ctx(7, 20);
  const auto dlog = LaurentSeries::constant(Q(1, ctx));
  EXPECT_EQ(bc_integral(dlog, Q(1, ctx), Q(8, ctx)).residue(3), 154);
  const auto dt = LaurentSeries::monomial(Q(1, ctx), 1);
  EXPECT_TRUE(bc_integral(dt, Q(1, ctx), Q(8, ctx)).congruent(Q(7, ctx), 20));
}

TEST(BcIntegral, DivergentEndpointRejected) {
  const PadicContext ctx(7, 20);
  const auto f = branch_root_series(Q(7, ctx), 3, SeriesSide::minus, 20);  // converges for v(x) > 1
  EXPECT_THROW(bc_integral(f, Q(49, ctx), Q(1, ctx)), DomainError);
}

TEST(BcIntegral, AdditivityAndLinearityProperty) {
  Gen gen(22);
  const PadicContext ctx(7, 20);
  auto unit = [&] { return Q(frac(gen.range(1, 6) + 7 * gen.range(0, 300), gen.range(1, 6)), ctx); };
  for (int i = 0; i < 100; ++i) {
    const auto w1 = random_laurent(gen, ctx, -5, 5);
    const auto w2 = random_laurent(gen, ctx, -5, 5);
    const auto x = unit(), y = unit(), z = unit();
    const auto split = bc_integral(w1, x, y) + bc_integral(w1, y, z);
    const auto whole = bc_integral(w1, x, z);
    EXPECT_TRUE(split.congruent(whole, std::min(split.absolute_precision(), whole.absolute_precision())));

    const auto a = Q(gen.rational(20), ctx), b = Q(gen.rational(20), ctx);
    const auto lhs = bc_integral(w1.scaled(a) + w2.scaled(b), x, y);
    const auto rhs = a * bc_integral(w1, x, y) + b * bc_integral(w2, x, y);
    const long prec = std::min(lhs.absolute_precision(), rhs.absolute_precision());
    EXPECT_GE(prec, 10);
    EXPECT_TRUE(lhs.congruent(rhs, prec));
  }
}

TEST(NewtonPolygon, Examples) {
  const PadicContext ctx(7, 20);
  const auto a = newton_polygon(LaurentSeries::from_rationals(ctx, {{0, -7}, {2, 1}}));
  EXPECT_EQ(a.vertices(), (std::vector<HullPoint>{{0, Rational(1)}, {2, Rational(0)}}));
  ASSERT_EQ(a.slopes().size(), 1u);
  EXPECT_EQ(a.slopes()[0].slope, frac(-1, 2));
  EXPECT_EQ(a.slopes()[0].length, 2);

  const auto b = newton_polygon(LaurentSeries::constant(Q(3, ctx)));
  EXPECT_EQ(b.vertices(), (std::vector<HullPoint>{{0, Rational(0)}}));
  EXPECT_TRUE(b.slopes().empty());

  const auto c = newton_polygon(LaurentSeries::from_rationals(ctx, {{1, 1}, {2, 7}}));
  EXPECT_EQ(c.vertices(), (std::vector<HullPoint>{{1, Rational(0)}, {2, Rational(1)}}));
  EXPECT_EQ(c.slopes()[0].slope, 1);
  EXPECT_EQ(c.roots_of_valuation(-1), 1);

  EXPECT_THROW(newton_polygon(LaurentSeries(ctx)), DomainError);
}

TEST(NewtonPolygon, SlopeLengthsSumToSpanProperty) {
  Gen gen(23);
  const PadicContext ctx(3, 20);
  for (int i = 0; i < 200; ++i) {
    const auto np = newton_polygon(random_laurent(gen, ctx, -10, 10));
    long total = 0;
    Rational prev;
    bool first = true;
    for (const auto& s : np.slopes()) {
      total += s.length;
      if (!first) EXPECT_GT(s.slope, prev);
      prev = s.slope;
      first = false;
    }
    EXPECT_EQ(total, np.span());
  }
}

TEST(CountZeros, Examples) {
  const PadicContext ctx(7, 20);
  const auto s = LaurentSeries::from_rationals(ctx, {{0, -7}, {2, 1}});
  const auto two = count_zeros_annulus(s, AnnulusSpec::annulus(1));
  EXPECT_EQ(two.count, 2);
  EXPECT_EQ(two.verdict, CountVerdict::exact);
  EXPECT_EQ(count_zeros_annulus(s, AnnulusSpec::annulus(frac(1, 4))).count, 0);
  EXPECT_EQ(count_zeros_annulus(LaurentSeries::constant(Q(5, ctx)), AnnulusSpec::annulus(1)).count, 0);
  EXPECT_THROW(count_zeros_annulus(LaurentSeries(ctx), AnnulusSpec::annulus(1)), DomainError);
}

TEST(CountZeros, TruncatedSeriesAreNotExact) {
  const PadicContext ctx(7, 20);
  // (1 - x/7)^(1/3) has no zeros on v(x) > 1; the tail keeps the verdict below exact.
  const auto f = branch_root_series(Q(7, ctx), 3, SeriesSide::minus, 20);
  const auto c = count_zeros_annulus(f, AnnulusSpec::between(1, 3));
  EXPECT_EQ(c.count, 0);
  EXPECT_EQ(c.verdict, CountVerdict::certified);
  // Near the edge of convergence the tail could dominate.
  const auto edge = count_zeros_annulus(f, AnnulusSpec::between(frac(1, 2), 3));
  EXPECT_EQ(edge.verdict, CountVerdict::indeterminate);
}

TEST(CountZeros, PlantedRootOracle) {
  Gen gen(24);
  const long p = 7;
  const PadicContext ctx(p, 30);
  const std::vector<Rational> betas{frac(1, 4), frac(1, 2), Rational(1), Rational(3)};
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial f({Rational(1)});
    std::vector<Rational> vals;
    const long k = gen.range(1, 5);
    for (long i = 0; i < k; ++i) {
      const Rational unit = gen.range(1, p - 1) + p * gen.range(0, 20);
      switch (gen.range(0, 3)) {
        case 0:
          f = f * Polynomial::linear_root(unit);
          vals.push_back(0);
          break;
        case 1:
          f = f * Polynomial::linear_root(unit * p);
          vals.push_back(1);
          break;
        case 2:
          f = f * Polynomial::linear_root(unit * p * p);
          vals.push_back(2);
          break;
        default:
          f = f * Polynomial({-unit * p, 0, 1});  // two roots of valuation 1/2
          vals.push_back(frac(1, 2));
          vals.push_back(frac(1, 2));
      }
    }
    const auto s = poly_series(f, ctx);
    for (const auto& beta : betas) {
      long planted = 0;
      for (const auto& v : vals) planted += (v > 0 && v < beta);
      const auto c = count_zeros_annulus(s, AnnulusSpec::annulus(beta));
      EXPECT_EQ(c.count, planted);
      EXPECT_EQ(c.verdict, CountVerdict::exact);
    }
  }
}

TEST(RolleBound, Examples) {
  EXPECT_EQ(rolle_zero_bound(5, 7, 1, 3).bound, 6);
  EXPECT_EQ(rolle_zero_bound(5, 7, 1, 3).mu, frac(6, 5));
  EXPECT_EQ(rolle_zero_bound(0, 7, 1, 3).bound, 0);
  EXPECT_EQ(rolle_zero_bound(10, 3, 1, 1).bound, 20);
  EXPECT_THROW(rolle_zero_bound(3, 2, 1, 1), HypothesisError);
  EXPECT_TRUE(rolle_zero_bound(3, 7, 1, 10).small_prime_warning);
  EXPECT_FALSE(rolle_zero_bound(3, 7, 1, 3).small_prime_warning);
}

TEST(RolleBound, MonomialIntegralsRespectBound) {
  Gen gen(25);
  for (int i = 0; i < 100; ++i) {
    const long p = gen.pick(std::vector<long>{5, 7, 11, 13});
    const long g = gen.range(1, (p - 1) / 2);
    const long w = gen.range(1, 12);
    const PadicContext ctx(p, 20);
    // Integral of z^w dz/z from a: (z^w - a^w)/w, with a inside 0 < v < 3.
    const Rational a = Rational(gen.range(1, p - 1)) * (gen.coin() ? p : p * p);
    const auto f = poly_series(Polynomial::monomial(1, w) - Polynomial({Rational(ipow(a.get_num(), w))}), ctx);
    const auto zeros = count_zeros_annulus(f, AnnulusSpec::annulus(3));
    EXPECT_EQ(zeros.count, w);
    EXPECT_LE(zeros.count, rolle_zero_bound(w, p, 1, g).bound);
  }
}
