#include "superchab/newton.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "superchab/errors.hpp"

namespace superchab {

std::vector<HullPoint> lower_convex_hull(std::vector<HullPoint> points) {
  std::map<long, Rational> lowest;
  for (auto& [x, y] : points) {
    auto it = lowest.find(x);
    if (it == lowest.end() || y < it->second) lowest[x] = y;
  }
  std::vector<HullPoint> hull;
  for (const auto& pt : lowest) {
    while (hull.size() >= 2) {
      const auto& [x0, y0] = hull[hull.size() - 2];
      const auto& [x1, y1] = hull.back();
      // Drop the middle point unless it lies strictly below the chord.
      if ((y1 - y0) * (pt.first - x0) >= (pt.second - y0) * (x1 - x0)) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(pt);
  }
  return hull;
}

NewtonPolygon::NewtonPolygon(std::vector<HullPoint> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw DomainError("Newton polygon of the zero series");
}

std::vector<NewtonSegment> NewtonPolygon::slopes() const {
  std::vector<NewtonSegment> out;
  for (size_t i = 0; i + 1 < vertices_.size(); ++i) {
    const long len = vertices_[i + 1].first - vertices_[i].first;
    out.push_back({(vertices_[i + 1].second - vertices_[i].second) / len, len});
  }
  return out;
}

long NewtonPolygon::span() const { return vertices_.back().first - vertices_.front().first; }

long NewtonPolygon::roots_of_valuation(const Rational& lambda) const {
  long total = 0;
  for (const auto& seg : slopes()) {
    if (seg.slope == -lambda) total += seg.length;
  }
  return total;
}

NewtonPolygon newton_polygon(const LaurentSeries& s) {
  std::vector<HullPoint> pts;
  for (long n = s.low(); n <= s.high(); ++n) {
    const PadicNumber& c = s.window()[n - s.low()];
    if (!c.is_zero()) pts.emplace_back(n, Rational(c.valuation()));
  }
  if (pts.empty()) throw DomainError("Newton polygon of the zero series");
  return NewtonPolygon(lower_convex_hull(std::move(pts)));
}

std::string to_string(CountVerdict v) {
  switch (v) {
    case CountVerdict::exact:
      return "exact";
    case CountVerdict::certified:
      return "certified";
    case CountVerdict::indeterminate:
      return "indeterminate";
  }
  return "unknown";
}

namespace {

struct Dominant {
  long index;
  Rational value;
};

// Term minimising v(a_n) + n*lambda; ties go to the index that wins just inside the interval.
Dominant dominant_term(const std::vector<HullPoint>& known, const Rational& lambda, bool prefer_low) {
  Dominant best{known.front().first, known.front().second + known.front().first * lambda};
  for (const auto& [n, v] : known) {
    const Rational val = v + n * lambda;
    if (val < best.value || (val == best.value && (prefer_low ? n < best.index : n > best.index))) {
      best = {n, val};
    }
  }
  return best;
}

// Terms the window does not pin down cannot overtake the dominant one at lambda.
bool dominance_certified(const LaurentSeries& s, const std::vector<HullPoint>& uncertain, const Dominant& d,
                         const Rational& lambda, bool prefer_low) {
  auto beats = [&](long n, const Rational& val) {
    if (val < d.value) return true;
    return val == d.value && (prefer_low ? n < d.index : n > d.index);
  };
  for (const auto& [n, b] : uncertain) {
    if (beats(n, b + n * lambda)) return false;
  }
  if (s.upper_tail().present) {
    const Rational rate = s.upper_tail().slope + lambda;
    const long n = s.high() + 1;
    if (rate < 0 || beats(n, s.upper_tail().offset + rate * n)) return false;
  }
  if (s.lower_tail().present) {
    const Rational rate = s.lower_tail().slope + lambda;
    const long n = s.low() - 1;
    if (rate > 0 || beats(n, s.lower_tail().offset + rate * n)) return false;
  }
  return true;
}

}  // namespace

ZeroCount count_zeros_annulus(const LaurentSeries& s, const AnnulusSpec& dom) {
  std::vector<HullPoint> known, uncertain;
  for (long n = s.low(); n <= s.high(); ++n) {
    const PadicNumber& c = s.window()[n - s.low()];
    if (c.is_exact_zero()) continue;
    (c.is_zero() ? uncertain : known).emplace_back(n, Rational(c.valuation()));
  }
  const bool has_tails = s.upper_tail().present || s.lower_tail().present;
  if (known.empty()) {
    if (uncertain.empty() && !has_tails) throw DomainError("zero counting on the zero series");
    return {0, CountVerdict::indeterminate, "no coefficient is known to be nonzero"};
  }
  if (dom.lower && dom.upper && *dom.lower >= *dom.upper) throw DomainError("empty valuation interval");

  bool certified = true;
  std::ostringstream why;
  const long top = known.back().first;
  const long bottom = known.front().first;

  long d_outer;  // dominant index as v(z) decreases to the outer boundary
  if (dom.lower) {
    const Dominant d = dominant_term(known, *dom.lower, true);
    d_outer = d.index;
    if (!dominance_certified(s, uncertain, d, *dom.lower, true)) {
      certified = false;
      why << "outer boundary v=" << to_fraction_string(*dom.lower) << " not certified; ";
    }
  } else {
    d_outer = top;
    bool ok = !s.upper_tail().present;
    for (const auto& u : uncertain) ok = ok && u.first < top;
    if (!ok) {
      certified = false;
      why << "top term unknown; ";
    }
  }

  long d_inner;
  if (dom.contains_origin) {
    if (s.lower_tail().present || bottom < 0 || (!uncertain.empty() && uncertain.front().first < 0)) {
      throw DomainError("series has a pole at the origin of a disc");
    }
    d_inner = 0;
  } else if (dom.upper) {
    const Dominant d = dominant_term(known, *dom.upper, false);
    d_inner = d.index;
    if (!dominance_certified(s, uncertain, d, *dom.upper, false)) {
      certified = false;
      why << "inner boundary v=" << to_fraction_string(*dom.upper) << " not certified; ";
    }
  } else {
    d_inner = bottom;
    bool ok = !s.lower_tail().present;
    for (const auto& u : uncertain) ok = ok && u.first > bottom;
    if (!ok) {
      certified = false;
      why << "bottom term unknown; ";
    }
  }

  ZeroCount out;
  out.count = d_outer - d_inner;
  if (!certified) {
    out.verdict = CountVerdict::indeterminate;
    out.detail = why.str();
  } else if (uncertain.empty() && !has_tails) {
    out.verdict = CountVerdict::exact;
  } else {
    out.verdict = CountVerdict::certified;
  }
  return out;
}

RolleBound rolle_zero_bound(long w, long p, long e, long g) {
  if (w < 0) throw DomainError("width must be nonnegative");
  if (e < 1) throw DomainError("ramification index must be positive");
  if (p <= e + 1) throw HypothesisError({"p > e + 1 (p = " + std::to_string(p) + ", e = " + std::to_string(e) + ")"});
  RolleBound out;
  out.mu = Rational(1) + frac(e, p - e - 1);
  out.mu.canonicalize();
  out.bound = to_long(floor_of(out.mu * w));
  out.small_prime_warning = p <= 2 * g;
  return out;
}

}  // namespace superchab
