#include "superchab/search.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <thread>

#include "superchab/bounds.hpp"
#include "superchab/errors.hpp"

namespace superchab {

bool operator<(const RationalPoint& a, const RationalPoint& b) {
  if (a.at_infinity != b.at_infinity) return b.at_infinity;
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

bool is_on_curve(const RationalPoint& pt, const SuperellipticCurve& curve) {
  if (pt.at_infinity) return points_at_infinity(curve) > 0;
  Rational lhs = 1;
  for (long i = 0; i < curve.m(); ++i) lhs *= pt.y;
  return lhs == curve.f().evaluate(pt.x);
}

namespace {

// Exact k-th root of n >= 0, if any.
std::optional<Integer> exact_root(const Integer& n, long k) {
  Integer r;
  if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k)) == 0) return std::nullopt;
  return r;
}

// Rational k-th roots of q.
std::vector<Rational> rational_roots_of(const Rational& q, long k) {
  if (q == 0) return {Rational(0)};
  const bool negative = q < 0;
  if (negative && k % 2 == 0) return {};
  const auto num = exact_root(abs(q.get_num()), k);
  const auto den = exact_root(q.get_den(), k);
  if (!num || !den) return {};
  const Rational root = frac(negative ? Integer(-*num) : *num, *den);
  if (k % 2 == 0) return {-root, root};
  return {root};
}

std::vector<RationalPoint> search_denominators(const SuperellipticCurve& curve, long height, long b_lo, long b_hi) {
  std::vector<RationalPoint> out;
  for (long b = b_lo; b <= b_hi; ++b) {
    for (long a = -height; a <= height; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const Rational x = frac(a, b);
      for (const auto& y : rational_roots_of(curve.f().evaluate(x), curve.m())) out.push_back({x, y, false});
    }
  }
  return out;
}

}  // namespace

long points_at_infinity(const SuperellipticCurve& curve) {
  const long delta = std::gcd(curve.m(), curve.degree());
  return static_cast<long>(rational_roots_of(curve.leading(), delta).size());
}

SearchReport enumerate_points(const SuperellipticCurve& curve, long height, unsigned threads) {
  SearchReport out;
  out.height = height;
  out.infinity_count = points_at_infinity(curve);
  if (height < 1) return out;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const long shards = std::min<long>(threads, height);
  std::vector<std::future<std::vector<RationalPoint>>> jobs;
  for (long s = 0; s < shards; ++s) {
    const long lo = 1 + s * height / shards;
    const long hi = (s + 1) * height / shards;
    jobs.push_back(std::async(std::launch::async, search_denominators, std::cref(curve), height, lo, hi));
  }
  for (auto& j : jobs) {
    auto part = j.get();
    out.points.insert(out.points.end(), part.begin(), part.end());
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

RationalPoint cover_image(const RationalPoint& pt, long m, long s) {
  if (s < 1 || m % s != 0) throw DomainError("cover degree must divide m");
  if (pt.at_infinity) return pt;
  Rational y = 1;
  for (long i = 0; i < m / s; ++i) y *= pt.y;
  return {pt.x, y, false};
}

SearchReport verify_bound(const SuperellipticCurve& curve, long r, long height, unsigned threads) {
  std::vector<std::string> violated = validate(curve).violations;
  if (curve.m() <= 2) violated.push_back("m > 2 (m = " + std::to_string(curve.m()) + ")");
  else if (r < 0 || !rank_hypothesis(curve.degree(), curve.m(), r)) {
    violated.push_back("r <= floor(deg/m) - 4 (r = " + std::to_string(r) + ", user-asserted)");
  }
  if (!violated.empty()) throw HypothesisError(violated);
  SearchReport out = enumerate_points(curve, height, threads);
  const long p = chabauty_prime(curve.m()).prime;
  BoundComparison cmp;
  cmp.r = r;
  cmp.theorem3_total = theorem3_bound(genus(curve), curve.m(), r, p);
  cmp.satisfied = out.count() + out.infinity_count < cmp.theorem3_total;
  out.bound = cmp;
  return out;
}

}  // namespace superchab
