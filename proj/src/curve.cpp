#include "superchab/curve.hpp"

#include <numeric>

#include "superchab/errors.hpp"

namespace superchab {

SuperellipticCurve::SuperellipticCurve(long m, Polynomial f) : m_(m), f_(std::move(f)) {
  if (m < 2) throw DomainError("m must be at least 2");
  if (f_.degree() < 1) throw DomainError("f must be nonconstant");
  original_degree_ = f_.degree();
  for (const auto& part : square_free_decomposition(f_)) {
    Polynomial rest = part.factor;
    for (const auto& r : rational_roots(part.factor)) {
      const Polynomial lin = Polynomial::linear_root(r);
      blocks_.push_back({lin, part.multiplicity, r});
      rest = rest.divmod(lin).first;
    }
    if (rest.degree() > 0) blocks_.push_back({rest.monic(), part.multiplicity, std::nullopt});
  }
}

SuperellipticCurve SuperellipticCurve::from_roots(long m, const Rational& c,
                                                  const std::vector<std::pair<Rational, long>>& roots) {
  if (c == 0) throw DomainError("leading coefficient must be nonzero");
  Polynomial f({c});
  for (const auto& [theta, n] : roots) {
    if (n < 1) throw DomainError("root multiplicity must be positive");
    f = f * Polynomial::linear_root(theta).pow(n);
  }
  return SuperellipticCurve(m, f);
}

long SuperellipticCurve::branch_count() const {
  long s = 0;
  for (const auto& b : blocks_) s += b.factor.degree();
  return s;
}

SuperellipticCurve SuperellipticCurve::with_original_degree(long d) const {
  SuperellipticCurve out = *this;
  out.original_degree_ = d;
  return out;
}

long genus(const SuperellipticCurve& curve) {
  const long m = curve.m();
  long rhs = m * (curve.branch_count() - 1) - std::gcd(m, curve.degree());
  for (const auto& b : curve.blocks()) rhs -= b.factor.degree() * std::gcd(m, b.multiplicity);
  if (rhs % 2 != 0) throw DomainError("non-integral genus: inconsistent input");
  const long g = (rhs + 2) / 2;
  if (g < 0) throw DomainError("negative genus: inconsistent input");
  return g;
}

Validation validate(const SuperellipticCurve& curve) {
  Validation out;
  out.stats.s = curve.branch_count();
  out.stats.degree = curve.degree();
  for (const auto& b : curve.blocks()) {
    if (b.multiplicity >= curve.m()) {
      out.violations.push_back("root multiplicity " + std::to_string(b.multiplicity) + " not < m = " +
                               std::to_string(curve.m()));
    }
  }
  if (curve.degree() < 4) out.violations.push_back("deg(f) = " + std::to_string(curve.degree()) + " not >= 4");
  try {
    out.stats.genus = genus(curve);
    if (out.stats.genus < 3) out.violations.push_back("genus " + std::to_string(out.stats.genus) + " not >= 3");
  } catch (const DomainError& e) {
    out.violations.push_back(e.what());
  }
  return out;
}

CurveStats require_valid(const SuperellipticCurve& curve) {
  Validation v = validate(curve);
  if (!v.ok()) throw HypothesisError(v.violations);
  return v.stats;
}

NormalizedCurve move_branch_from_infinity(const SuperellipticCurve& curve) {
  long t = 0;
  while (curve.f().evaluate(Rational(t)) == 0) ++t;
  const Polynomial shifted = curve.f().shifted(Rational(t));
  const long m = curve.m();
  const long deg = curve.degree();
  const long k = (deg + m - 1) / m;
  SuperellipticCurve out(m, shifted.reversed(k * m));
  return {out.with_original_degree(curve.original_degree()), Rational(t), k * m - deg};
}

PadicPoint apply_automorphism(const PadicPoint& pt, const SuperellipticCurve& curve, const PadicContext& ctx, long k) {
  const long m = curve.m();
  const long kk = ((k % m) + m) % m;
  if (pt.at_infinity || kk == 0) return pt;
  if (2 * kk == m) return {pt.x, -pt.y, false};
  const PadicNumber zeta = primitive_root_of_unity(m, ctx);
  return {pt.x, zeta.pow(kk) * pt.y, false};
}

bool on_curve(const PadicPoint& pt, const SuperellipticCurve& curve, long precision) {
  if (pt.at_infinity) return true;
  return (pt.y.pow(curve.m()) - curve.f().evaluate(pt.x)).valuation() >= precision;
}

long branch_count_cap(const SuperellipticCurve& curve) {
  const long g = genus(curve);
  const long cap = to_long(floor_of(frac(4 * g - 4, curve.m()))) + 4;
  if (curve.branch_count() > cap) {
    throw VerificationError("branch count " + std::to_string(curve.branch_count()) + " exceeds cap " +
                            std::to_string(cap));
  }
  return cap;
}

}  // namespace superchab
