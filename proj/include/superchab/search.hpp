#pragma once

#include <optional>
#include <vector>

#include "superchab/curve.hpp"

namespace superchab {

struct RationalPoint {
  Rational x;
  Rational y;
  bool at_infinity = false;
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};
bool operator<(const RationalPoint& a, const RationalPoint& b);

bool is_on_curve(const RationalPoint& pt, const SuperellipticCurve& curve);

// Rational points above infinity on the smooth model: rational w with w^delta = lead(f), delta = gcd(m, deg f).
long points_at_infinity(const SuperellipticCurve& curve);

struct BoundComparison {
  long theorem3_total = 0;
  long r = 0;  // user-asserted
  bool satisfied = false;
};

struct SearchReport {
  long height = 0;
  std::vector<RationalPoint> points;  // affine, sorted, distinct
  long infinity_count = 0;
  long count() const { return static_cast<long>(points.size()); }
  std::optional<BoundComparison> bound;
};

// All affine points with x = a/b, gcd(a, b) = 1, |a|, |b| <= H.
SearchReport enumerate_points(const SuperellipticCurve& curve, long height, unsigned threads = 0);

// (x, y^(m/s)) on y^s = f(x).
RationalPoint cover_image(const RationalPoint& pt, long m, long s);

// Search plus the strict comparison affine + infinity < theorem3 total.
SearchReport verify_bound(const SuperellipticCurve& curve, long r, long height, unsigned threads = 0);

}  // namespace superchab
