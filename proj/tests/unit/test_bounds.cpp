#include <gtest/gtest.h>

#include "superchab/bounds.hpp"
#include "superchab/errors.hpp"
#include "support.hpp"

using namespace superchab;
using superchab::testing::Gen;

namespace {

// Degree-12 cubic cover with twelve simple rational roots.
SuperellipticCurve deg12() {
  std::vector<std::pair<Rational, long>> roots;
  for (long t = 1; t <= 12; ++t) roots.emplace_back(Rational(t), 1);
  return SuperellipticCurve::from_roots(3, 1, roots);
}

std::vector<PadicNumber> row(std::vector<long> xs, const PadicContext& ctx) {
  std::vector<PadicNumber> out;
  for (long x : xs) out.push_back(PadicNumber::from_integer(x, ctx));
  return out;
}

}  // namespace

TEST(Mu, Examples) {
  EXPECT_EQ(mu_factor(7, 1), frac(6, 5));
  EXPECT_EQ(mu_factor(3, 1), Rational(2));
  EXPECT_EQ(mu_factor(11, 2), frac(10, 8));
  EXPECT_THROW(mu_factor(2, 1), HypothesisError);
  EXPECT_THROW(mu_factor(5, 0), DomainError);
}

TEST(RankHypothesis, Examples) {
  EXPECT_TRUE(rank_hypothesis(12, 3, 0));
  EXPECT_FALSE(rank_hypothesis(12, 3, 1));
  EXPECT_TRUE(rank_hypothesis(30, 5, 2));
  EXPECT_FALSE(rank_hypothesis(14, 5, 0));
  EXPECT_THROW(rank_hypothesis(12, 2, 0), DomainError);
  EXPECT_THROW(rank_hypothesis(12, 3, -1), DomainError);
}

TEST(Differentials, BasisIndicesAndPullback) {
  EXPECT_TRUE(differential_basis_indices(SuperellipticCurve::from_roots(3, 1, {{0, 1}, {1, 1}, {2, 1}, {3, 1}})).empty());
  const IndexRange r = differential_basis_indices(deg12());
  EXPECT_EQ(r.first, 0);
  EXPECT_EQ(r.last, 2);
  EXPECT_EQ(r.size(), 3);
  EXPECT_EQ(pullback_exponent(0, 2, 1, 3), 1);
  EXPECT_EQ(pullback_exponent(2, 2, 1, 3), 7);
  EXPECT_EQ(pullback_exponent(0, 2, 2, 4), 1);
  EXPECT_THROW(pullback_exponent(0, 3, 2, 4), DomainError);
}

TEST(Width, Examples) {
  const PadicContext ctx(7, 20);
  // One constraint on three differentials: w_2 - w_1 has width m.
  const auto c = minimal_width_differential({row({0, 1, 1}, ctx)}, 0, 2, 1, 3, ctx);
  EXPECT_EQ(c.first, 0);
  EXPECT_EQ(c.last, 0);
  EXPECT_EQ(c.width, 0);
  const auto c2 = minimal_width_differential({row({1, 1, 1}, ctx)}, 0, 2, 1, 3, ctx);
  EXPECT_EQ(c2.first, 0);
  EXPECT_EQ(c2.last, 1);
  EXPECT_EQ(c2.width, 3);
  EXPECT_EQ(c2.cap, 7);
  EXPECT_TRUE((c2.omega[0] + c2.omega[1]).is_zero());
  EXPECT_THROW(minimal_width_differential({row({1, 1}, ctx)}, 0, 2, 1, 3, ctx), DomainError);
}

TEST(Width, RandomConstraintsAreKilledWithinCap) {
  Gen gen(51);
  const PadicContext ctx(7, 20);
  for (int trial = 0; trial < 200; ++trial) {
    const long r = gen.range(0, 4);
    const long k = gen.range(0, r + 2);  // at most r + 2 constraints leave a kernel
    std::vector<std::vector<PadicNumber>> cons;
    for (long i = 0; i < k; ++i) {
      std::vector<long> xs;
      for (long j = 0; j < r + 3; ++j) xs.push_back(gen.range(-60, 60));
      cons.push_back(row(xs, ctx));
    }
    const auto cert = minimal_width_differential(cons, r, 2, 1, 3, ctx);
    EXPECT_LE(cert.width, cert.cap);
    EXPECT_FALSE(cert.omega[cert.first].is_zero());
    for (const auto& c : cons) {
      PadicNumber s(ctx);
      for (long j = 0; j < r + 3; ++j) s += c[j] * cert.omega[j];
      EXPECT_GE(s.valuation(), 15);
    }
    // Narrowest: no shorter window has a kernel, checked on the span length.
    EXPECT_LE(cert.last - cert.first, k);
  }
}

TEST(Width, TooManyGenericConstraints) {
  const PadicContext ctx(7, 20);
  std::vector<std::vector<PadicNumber>> cons = {row({1, 0, 0}, ctx), row({0, 1, 0}, ctx), row({0, 0, 1}, ctx)};
  EXPECT_THROW(minimal_width_differential(cons, 0, 2, 1, 3, ctx), DomainError);
}

TEST(Bounds, FrozenValues) {
  EXPECT_EQ(disc_point_bound(10, 7, 1, 0), 144);
  EXPECT_EQ(disc_point_bound(10, 7, 1, 2), 148);
  EXPECT_EQ(disc_point_bound(3, 5, 1, 1), 26);
  EXPECT_EQ(annulus_point_bound(10, 3, 7, 1, 0), 140);
  EXPECT_EQ(annulus_point_bound(3, 4, 5, 1, 1), 64);
  EXPECT_EQ(annulus_point_bound(6, 5, 11, 1, 1), 111);
  EXPECT_EQ(theorem3_bound(10, 3, 0, 7), 378);
  EXPECT_EQ(theorem3_bound(10, 3, 2, 7), 542);
  EXPECT_EQ(theorem3_bound(6, 5, 1, 11), 324);
  EXPECT_THROW(annulus_point_bound(3, 2, 5, 1, 0), DomainError);
}

TEST(Bounds, StollReference) {
  EXPECT_EQ(stoll_reference_bound(3, 0), 67);
  EXPECT_EQ(stoll_reference_bound(4, 1), 130);
  EXPECT_THROW(stoll_reference_bound(3, 1), HypothesisError);
  EXPECT_THROW(stoll_reference_bound(2, 0), HypothesisError);
}

TEST(Bounds, CoverTransfer) {
  EXPECT_EQ(cover_transfer(100, 4, 2), 200);
  EXPECT_EQ(cover_transfer(100, 6, 2), 100);
  EXPECT_EQ(cover_transfer(100, 6, 3), 200);
  EXPECT_THROW(cover_transfer(100, 6, 4), DomainError);
}

TEST(Bounds, ReportForDegreeTwelve) {
  const BoundReport b = bound_report(deg12(), 0);
  EXPECT_EQ(b.g, 10);
  EXPECT_EQ(b.p, 7);
  EXPECT_EQ(b.mu, frac(6, 5));
  EXPECT_TRUE(b.rank_ok);
  EXPECT_EQ(b.disc_bound, 144);
  EXPECT_EQ(b.annulus_bound, 140);
  EXPECT_EQ(b.sharp_total, 284);
  EXPECT_EQ(b.theorem3_total, 378);
  EXPECT_TRUE(b.prop13_warning);
  EXPECT_FALSE(bound_report(deg12(), 1).rank_ok);
}

TEST(Bounds, SharpTotalNeverExceedsClosedForm) {
  for (long m = 3; m <= 9; ++m) {
    for (long g = 3; g <= 40; ++g) {
      for (long r = 0; r <= 10; ++r) {
        for (long p = 3; p <= 103; p += 2) {
          if (!is_prime(p)) continue;
          const long sharp = disc_point_bound(g, p, 1, r) + annulus_point_bound(g, m, p, 1, r);
          ASSERT_LE(sharp, theorem3_bound(g, m, r, p)) << m << " " << g << " " << r << " " << p;
        }
      }
    }
  }
}

TEST(Bounds, ClosedFormIsAffineInRank) {
  Gen gen(52);
  for (int i = 0; i < 300; ++i) {
    const long g = gen.range(3, 100), m = gen.range(3, 20), p = gen.range(3, 200), r = gen.range(0, 50);
    EXPECT_EQ(theorem3_bound(g, m, r + 1, p) - theorem3_bound(g, m, r, p), 8 * g - 8 + 2 * m + 4);
  }
}
