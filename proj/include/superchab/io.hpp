#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "superchab/bounds.hpp"
#include "superchab/charts.hpp"
#include "superchab/search.hpp"

namespace superchab {

using Json = nlohmann::ordered_json;
inline constexpr int kSchemaVersion = 1;

struct CurveInput {
  long m = 0;
  Polynomial f;
  std::optional<long> rank;  // user-asserted, never computed
  std::optional<long> prime;
  long precision = 20;
  long height = 50;
};

// Statements separated by ';':  m=<int>  f=[a0,...,ad]  f=prod[(theta,n),...]  c=<q>
// rank=<int>  prime=<int>  precision=<int>  height=<int>.  Rationals are written num/den.
// Positional forms "m; [a0,...]" and "m; c; [(theta,n),...]" are accepted too.
// Throws ParseError with a 1-based line and column; a root multiplicity >= m is a HypothesisError.
CurveInput parse_curve_input(const std::string& text);

std::string fraction(const Rational& q);
Json polynomial_json(const Polynomial& f);
Json curve_json(const SuperellipticCurve& curve);
Json bound_json(const BoundReport& report);
Json point_json(const RationalPoint& pt);
Json search_json(const SearchReport& report);
Json padic_json(const PadicNumber& x);
Json annulus_json(const ResidueAnnulus& annulus, const AnnulusCharts& charts);

}  // namespace superchab
