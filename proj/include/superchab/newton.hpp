#pragma once

#include <string>
#include <utility>
#include <vector>

#include "superchab/series.hpp"

namespace superchab {

using HullPoint = std::pair<long, Rational>;

// Lower convex hull, vertices sorted by x; collinear interior points are dropped.
std::vector<HullPoint> lower_convex_hull(std::vector<HullPoint> points);

struct NewtonSegment {
  Rational slope;
  long length = 0;
};

class NewtonPolygon {
 public:
  explicit NewtonPolygon(std::vector<HullPoint> vertices);

  const std::vector<HullPoint>& vertices() const { return vertices_; }
  std::vector<NewtonSegment> slopes() const;
  long span() const;
  // Number of roots of valuation exactly lambda (slope -lambda).
  long roots_of_valuation(const Rational& lambda) const;

 private:
  std::vector<HullPoint> vertices_;
};

// Hull of the window coefficients known to be nonzero.
NewtonPolygon newton_polygon(const LaurentSeries& s);

enum class CountVerdict { exact, certified, indeterminate };

struct ZeroCount {
  long count = 0;
  CountVerdict verdict = CountVerdict::exact;
  std::string detail;
};

std::string to_string(CountVerdict v);

// Zeros of s on the region described by dom (open valuation interval, origin included for discs).
ZeroCount count_zeros_annulus(const LaurentSeries& s, const AnnulusSpec& dom);

struct RolleBound {
  long bound = 0;
  Rational mu;
  bool small_prime_warning = false;  // p <= 2g
};

// floor(mu * w) with mu = 1 + e/(p - e - 1); throws HypothesisError when p <= e + 1.
RolleBound rolle_zero_bound(long w, long p, long e, long g);

}  // namespace superchab
