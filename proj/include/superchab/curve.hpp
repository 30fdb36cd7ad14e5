#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superchab/polynomial.hpp"

namespace superchab {

// Branch points of one squarefree block: the roots of `factor`, each with `multiplicity`.
struct BranchBlock {
  Polynomial factor;  // monic
  long multiplicity = 1;
  std::optional<Rational> root;  // set when the block is a single rational root
};

// y^m = f(x) over Q.
class SuperellipticCurve {
 public:
  SuperellipticCurve(long m, Polynomial f);
  // f = c * prod (x - theta)^n
  static SuperellipticCurve from_roots(long m, const Rational& c, const std::vector<std::pair<Rational, long>>& roots);

  long m() const { return m_; }
  const Polynomial& f() const { return f_; }
  Rational leading() const { return f_.leading(); }
  long degree() const { return f_.degree(); }
  // Degree before the point at infinity was moved off the branch locus.
  long original_degree() const { return original_degree_; }
  const std::vector<BranchBlock>& blocks() const { return blocks_; }
  long branch_count() const;  // s: distinct branch points over the algebraic closure

  SuperellipticCurve with_original_degree(long d) const;

 private:
  long m_;
  Polynomial f_;
  long original_degree_;
  std::vector<BranchBlock> blocks_;
};

struct CurveStats {
  long s = 0;
  long degree = 0;
  long genus = 0;
};

struct Validation {
  CurveStats stats;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Riemann-Hurwitz genus; throws DomainError when the right-hand side is odd or negative.
long genus(const SuperellipticCurve& curve);
Validation validate(const SuperellipticCurve& curve);
// Throws HypothesisError listing every violation.
CurveStats require_valid(const SuperellipticCurve& curve);

struct NormalizedCurve {
  SuperellipticCurve curve;
  Rational shift;       // x -> x + shift applied first
  long new_root_multiplicity = 0;  // multiplicity of the branch point created at 0
};

// Translate so f(0) != 0, then x -> 1/x, y -> y / x^ceil(deg/m).
NormalizedCurve move_branch_from_infinity(const SuperellipticCurve& curve);

struct PadicPoint {
  PadicNumber x;
  PadicNumber y;
  bool at_infinity = false;
};

// (x, zeta_m^k y); zeta_m is taken from the context unless zeta_m^k = +-1.
PadicPoint apply_automorphism(const PadicPoint& pt, const SuperellipticCurve& curve, const PadicContext& ctx, long k);
bool on_curve(const PadicPoint& pt, const SuperellipticCurve& curve, long precision);

// floor((4g - 4)/m) + 4, checked against s.
long branch_count_cap(const SuperellipticCurve& curve);

}  // namespace superchab
