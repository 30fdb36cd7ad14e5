#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "superchab/errors.hpp"
#include "superchab/search.hpp"
#include "support.hpp"

using namespace superchab;
using superchab::testing::Gen;

namespace {

// k-th root of n >= 0 by bisection, independent of the GMP root routine.
std::optional<Integer> bisect_root(const Integer& n, long k) {
  Integer lo = 0, hi = 1;
  auto power = [k](const Integer& x) {
    Integer out = 1;
    for (long i = 0; i < k; ++i) out *= x;
    return out;
  };
  while (power(hi) < n) hi *= 2;
  while (lo < hi) {
    const Integer mid = (lo + hi) / 2;
    if (power(mid) < n) lo = mid + 1;
    else hi = mid;
  }
  if (power(lo) == n) return lo;
  return std::nullopt;
}

std::set<std::pair<Rational, Rational>> oracle_points(const SuperellipticCurve& c, long H) {
  std::set<std::pair<Rational, Rational>> out;
  const long m = c.m();
  for (long b = 1; b <= H; ++b) {
    for (long a = -H; a <= H; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const Rational x = frac(a, b);
      const Rational v = c.f().evaluate(x);
      if (v == 0) {
        out.insert({x, Rational(0)});
        continue;
      }
      if (v < 0 && m % 2 == 0) continue;
      const Integer num = v.get_num();
      const auto rn = bisect_root(num < 0 ? Integer(-num) : num, m);
      const auto rd = bisect_root(v.get_den(), m);
      if (!rn || !rd) continue;
      const Rational y = frac(v < 0 ? Integer(-*rn) : *rn, *rd);
      out.insert({x, y});
      if (m % 2 == 0) out.insert({x, -y});
    }
  }
  return out;
}

std::vector<std::pair<Rational, long>> simple_roots(long n) {
  std::vector<std::pair<Rational, long>> roots;
  for (long t = 1; t <= n; ++t) roots.emplace_back(Rational(t), 1);
  return roots;
}

}  // namespace

TEST(Search, IsOnCurve) {
  const SuperellipticCurve c(3, Polynomial({1, 0, 0, 0, 1}));
  EXPECT_TRUE(is_on_curve({0, 1}, c));
  EXPECT_FALSE(is_on_curve({0, -1}, c));
  EXPECT_FALSE(is_on_curve({1, 1}, c));
  EXPECT_TRUE(is_on_curve({0, 0, true}, c));
}

TEST(Search, Examples) {
  const SuperellipticCurve cubic(3, Polynomial({1, 0, 0, 0, 1}));
  const auto r = enumerate_points(cubic, 10);
  ASSERT_EQ(r.count(), 1);
  EXPECT_EQ(r.points[0], (RationalPoint{0, 1}));
  EXPECT_EQ(r.infinity_count, 1);

  const SuperellipticCurve quad(2, Polynomial({1, 0, 0, 0, 1}));
  const auto q = enumerate_points(quad, 10);
  EXPECT_EQ(q.count(), 2);
  EXPECT_EQ(q.infinity_count, 2);

  // y^3 = 2x^3 (x-1)...: leading 2 is not a cube, so infinity has no rational point.
  EXPECT_EQ(points_at_infinity(SuperellipticCurve::from_roots(3, 2, simple_roots(6))), 0);
  EXPECT_EQ(points_at_infinity(SuperellipticCurve::from_roots(3, 8, simple_roots(6))), 1);
  EXPECT_EQ(points_at_infinity(SuperellipticCurve::from_roots(3, 2, simple_roots(5))), 1);
  EXPECT_EQ(points_at_infinity(SuperellipticCurve::from_roots(4, -4, simple_roots(6))), 0);
  EXPECT_EQ(points_at_infinity(SuperellipticCurve::from_roots(4, 4, simple_roots(6))), 2);
}

TEST(Search, MatchesBisectionOracle) {
  Gen gen(61);
  for (int trial = 0; trial < 20; ++trial) {
    const long m = gen.range(2, 5);
    std::vector<Rational> coeffs;
    const long deg = gen.range(3, 6);
    for (long i = 0; i <= deg; ++i) coeffs.push_back(gen.range(-6, 6));
    coeffs.back() = gen.nonzero(-3, 3);
    const SuperellipticCurve c(m, Polynomial(coeffs));
    const long H = gen.range(5, 20);
    const auto report = enumerate_points(c, H, static_cast<unsigned>(gen.range(1, 5)));
    std::set<std::pair<Rational, Rational>> got;
    for (const auto& pt : report.points) {
      EXPECT_TRUE(is_on_curve(pt, c));
      got.insert({pt.x, pt.y});
    }
    EXPECT_EQ(got.size(), report.points.size()) << "duplicates";
    EXPECT_EQ(got, oracle_points(c, H)) << c.f().to_string();
    EXPECT_TRUE(std::is_sorted(report.points.begin(), report.points.end()));
  }
}

TEST(Search, MonotoneInHeight) {
  const auto c = SuperellipticCurve::from_roots(3, 1, {{0, 1}, {1, 1}, {-1, 1}, {2, 1}, {frac(1, 2), 1}});
  long previous = 0;
  for (long H = 1; H <= 12; ++H) {
    const auto r = enumerate_points(c, H);
    EXPECT_GE(r.count(), previous);
    previous = r.count();
  }
}

TEST(Search, CoverImagesLandOnTheQuotient) {
  const auto c = SuperellipticCurve::from_roots(6, 1, {{0, 1}, {1, 1}, {-1, 1}, {3, 1}, {-3, 1}, {5, 1}});
  for (long s : {2L, 3L, 6L}) {
    const SuperellipticCurve quotient(s, c.f());
    for (const auto& pt : enumerate_points(c, 15).points) {
      EXPECT_TRUE(is_on_curve(cover_image(pt, 6, s), quotient));
    }
  }
  EXPECT_THROW(cover_image({0, 0}, 6, 4), DomainError);
}

TEST(Verify, DegreeTwelve) {
  const auto c = SuperellipticCurve::from_roots(3, 1, simple_roots(12));
  const auto r = verify_bound(c, 0, 6);
  ASSERT_TRUE(r.bound);
  EXPECT_EQ(r.bound->theorem3_total, 378);
  EXPECT_GE(r.count(), 6);  // the roots x = 1..6 at least
  EXPECT_EQ(r.infinity_count, 1);
  EXPECT_TRUE(r.bound->satisfied);
  EXPECT_THROW(verify_bound(c, 1, 6), HypothesisError);
  EXPECT_THROW(verify_bound(SuperellipticCurve(2, c.f()), 0, 6), HypothesisError);
}
