#include "superchab/bounds.hpp"

#include "superchab/errors.hpp"

namespace superchab {

Rational mu_factor(long p, long e) {
  if (e < 1) throw DomainError("ramification index must be positive");
  if (p <= e + 1) throw HypothesisError({"p > e + 1 (p = " + std::to_string(p) + ", e = " + std::to_string(e) + ")"});
  return Rational(1) + frac(e, p - e - 1);
}

bool rank_hypothesis(long degree, long m, long r) {
  if (m <= 2) throw DomainError("rank hypothesis is stated for m > 2");
  if (r < 0) throw DomainError("rank must be nonnegative");
  return r <= degree / m - 4;
}

IndexRange differential_basis_indices(const SuperellipticCurve& curve) {
  return {0, curve.degree() / curve.m() - 2};
}

long pullback_exponent(long i, long n0, long d, long m) {
  if (i < 0 || d < 1) throw DomainError("invalid differential index or split degree");
  const long num = (i + 1) * m - n0;
  if (num % d != 0) throw DomainError("inconsistent annulus data: d does not divide (i+1)m - n0");
  return num / d;
}

namespace {

// Kernel basis of the rows restricted to columns [lo, hi], by elimination pivoting on least valuation.
std::optional<DifferentialVector> kernel_vector(const std::vector<std::vector<PadicNumber>>& rows, long lo, long hi,
                                                const PadicContext& ctx) {
  const long ncols = hi - lo + 1;
  std::vector<std::vector<PadicNumber>> a;
  for (const auto& row : rows) a.emplace_back(row.begin() + lo, row.begin() + hi + 1);
  std::vector<long> pivot_col;
  size_t rank = 0;
  for (long c = 0; c < ncols && rank < a.size(); ++c) {
    size_t best = a.size();
    for (size_t i = rank; i < a.size(); ++i) {
      if (a[i][c].is_zero()) continue;
      if (best == a.size() || a[i][c].valuation() < a[best][c].valuation()) best = i;
    }
    if (best == a.size()) continue;
    std::swap(a[rank], a[best]);
    const PadicNumber inv = a[rank][c].inverse();
    for (auto& x : a[rank]) x *= inv;
    for (size_t i = 0; i < a.size(); ++i) {
      if (i == rank || a[i][c].is_zero()) continue;
      const PadicNumber factor = a[i][c];
      for (long k = 0; k < ncols; ++k) a[i][k] -= factor * a[rank][k];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  if (static_cast<long>(rank) == ncols) return std::nullopt;
  // A free column set to 1 determines the pivot columns.
  std::vector<bool> is_pivot(ncols, false);
  for (long c : pivot_col) is_pivot[c] = true;
  long free = 0;
  while (is_pivot[free]) ++free;
  DifferentialVector v(ncols, PadicNumber(ctx));
  v[free] = PadicNumber::from_integer(1, ctx);
  for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][free];
  return v;
}

}  // namespace

WidthCertificate minimal_width_differential(const std::vector<std::vector<PadicNumber>>& constraints, long r,
                                            long n0, long d, long m, const PadicContext& ctx) {
  if (r < 0) throw DomainError("rank must be nonnegative");
  const long dim = r + 3;
  for (const auto& c : constraints) {
    if (static_cast<long>(c.size()) != dim) throw DomainError("constraint length must be r + 3");
  }
  WidthCertificate out;
  out.cap = to_long(floor_of(frac(m * (r + 2), d))) + 1;
  for (long len = 1; len <= dim; ++len) {
    for (long lo = 0; lo + len <= dim; ++lo) {
      const long hi = lo + len - 1;
      auto v = kernel_vector(constraints, lo, hi, ctx);
      if (!v) continue;
      out.omega.assign(dim, PadicNumber(ctx));
      for (long i = lo; i <= hi; ++i) out.omega[i] = (*v)[i - lo];
      out.first = lo;
      out.last = hi;
      while (out.omega[out.first].is_zero()) ++out.first;
      while (out.omega[out.last].is_zero()) --out.last;
      out.width = pullback_exponent(out.last, n0, d, m) - pullback_exponent(out.first, n0, d, m);
      if (out.width > out.cap) throw VerificationError("differential width exceeds m(r+2)/d + 1");
      return out;
    }
  }
  throw DomainError("no nonzero differential satisfies the constraints");
}

long disc_point_bound(long g, long p, long e, long r) {
  return to_long(floor_of(Rational((2 * p + 2) * (g - 1)) + 2 * mu_factor(p, e) * r));
}

long annulus_point_bound(long g, long m, long p, long e, long r) {
  if (m <= 2) throw DomainError("annulus bound is stated for m > 2");
  const Rational orbits = frac(4 * g - 4, m) + 1;
  return to_long(floor_of(orbits * mu_factor(p, e) * m * (r + 3)));
}

long theorem3_bound(long g, long m, long r, long p) {
  return (8 * g - 8) * (r + 3) + 2 * m * (r + 3) + (2 * p + 2) * (g - 1) + 4 * r;
}

long stoll_reference_bound(long g, long r) {
  std::vector<std::string> violated;
  if (g < 3) violated.push_back("g >= 3 (g = " + std::to_string(g) + ")");
  if (r < 0 || r > g - 3) violated.push_back("0 <= r <= g - 3 (r = " + std::to_string(r) + ")");
  if (!violated.empty()) throw HypothesisError(violated);
  return r == 0 ? 33 * (g - 1) + 1 : 8 * r * g + 33 * (g - 1) - 1;
}

Integer cover_transfer(const Integer& bound, long m, long s) {
  if (s < 1 || m % s != 0) throw DomainError("cover degree must divide m");
  return (m / s) % 2 == 0 ? Integer(2 * bound) : bound;
}

BoundReport bound_report(const SuperellipticCurve& curve, long r, std::optional<long> prime) {
  BoundReport out;
  out.g = genus(curve);
  out.r = r;
  out.m = curve.m();
  out.degree = curve.degree();
  out.normalized_degree = move_branch_from_infinity(curve).curve.degree();
  out.p = prime ? *prime : chabauty_prime(curve.m()).prime;
  out.e = 1;
  out.mu = mu_factor(out.p, out.e);
  out.rank_ok = out.m > 2 && rank_hypothesis(out.degree, out.m, r);
  out.disc_bound = disc_point_bound(out.g, out.p, out.e, r);
  out.annulus_bound = out.m > 2 ? annulus_point_bound(out.g, out.m, out.p, out.e, r) : 0;
  out.sharp_total = out.disc_bound + out.annulus_bound;
  out.theorem3_total = theorem3_bound(out.g, out.m, r, out.p);
  out.prop13_warning = out.p <= 2 * out.g;
  if (out.rank_ok && !prime && out.sharp_total > out.theorem3_total) {
    throw VerificationError("sharp total exceeds the closed-form bound");
  }
  return out;
}

}  // namespace superchab
