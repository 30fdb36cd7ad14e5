#pragma once

#include <vector>

#include "superchab/curve.hpp"
#include "superchab/geometry.hpp"

namespace superchab {

// mu = 1 + e/(p - e - 1); requires p > e + 1.
Rational mu_factor(long p, long e);

// r <= floor(deg/m) - 4, for m > 2.
bool rank_hypothesis(long degree, long m, long r);

// Holomorphic differentials x^i dx/y for first <= i <= last; empty when last < first.
struct IndexRange {
  long first = 0;
  long last = -1;
  bool empty() const { return last < first; }
  long size() const { return empty() ? 0 : last - first + 1; }
};
IndexRange differential_basis_indices(const SuperellipticCurve& curve);

// Exponent of z in the pullback of x^i dx/y to an annulus chart: ((i+1)m - n0)/d.
long pullback_exponent(long i, long n0, long d, long m);

// Coefficients c_0..c_k of sum c_i x^i dx/y.
using DifferentialVector = std::vector<PadicNumber>;

struct WidthCertificate {
  DifferentialVector omega;
  long first = 0;  // occupied index range
  long last = 0;
  long width = 0;  // spread of the occupied pullback exponents
  long cap = 0;    // floor(m(r+2)/d) + 1
};

// Nonzero vector in span(w_0..w_{r+2}) killed by every constraint, with the narrowest support.
// Each constraint lists its values on w_0..w_{r+2}.
WidthCertificate minimal_width_differential(const std::vector<std::vector<PadicNumber>>& constraints, long r,
                                            long n0, long d, long m, const PadicContext& ctx);

long disc_point_bound(long g, long p, long e, long r);
long annulus_point_bound(long g, long m, long p, long e, long r);
long theorem3_bound(long g, long m, long r, long p);
long stoll_reference_bound(long g, long r);
Integer cover_transfer(const Integer& bound, long m, long s);

struct BoundReport {
  long g = 0;
  long r = 0;
  long m = 0;
  long degree = 0;             // as given; used in the rank hypothesis
  long normalized_degree = 0;  // after moving the branch point off infinity
  long p = 0;
  long e = 1;
  Rational mu;
  bool rank_ok = false;
  long disc_bound = 0;
  long annulus_bound = 0;
  long sharp_total = 0;     // non-strict
  long theorem3_total = 0;  // strict
  bool prop13_warning = false;  // p <= 2g
};

// p defaults to the least prime congruent to 1 mod m.
BoundReport bound_report(const SuperellipticCurve& curve, long r, std::optional<long> prime = std::nullopt);

}  // namespace superchab
