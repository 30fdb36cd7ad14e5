#pragma once

#include <string>
#include <vector>

#include "superchab/geometry.hpp"
#include "superchab/series.hpp"

namespace superchab {

enum class ChartVerdict { charted, no_points, unparameterized, excluded };
std::string to_string(ChartVerdict v);

// (x(z), y(z)) on the z-domain, with y^m - f(x) checked to `attained` digits.
struct ChartMap {
  long sheet = 0;
  LaurentSeries x;
  LaurentSeries y;
  long attained = 0;
};

struct AnnulusCharts {
  ChartVerdict verdict = ChartVerdict::unparameterized;
  std::string detail;
  long d = 1;
  long inner_exponent = 1;  // x = c + p^v_lo * U * z^(m/d)
  long unit = 0;            // the u in [1, p) used for U and gamma
  std::optional<PadicNumber> gamma;
  AnnulusSpec domain;
  std::vector<ChartMap> charts;
  long attained = 0;
  long tau_rotation = 0;  // tau sends sheet d-1 to sheet 0 through z -> zeta_m^tau_rotation z
};

// Sheets are y_j = zeta_m^j gamma u^n z^(n0/d) h(X), j = 0..d-1; one per component of the preimage.
AnnulusCharts parameterize_annulus(const SuperellipticCurve& curve, const BranchLocus& locus,
                                   const ResidueAnnulus& annulus, const PadicContext& ctx,
                                   long limit = LaurentSeries::kDefaultLimit);

struct TauImage {
  long sheet = 0;
  PadicNumber omega;  // tau(chart j)(z) = chart sheet(omega z)
};
TauImage tau_image(const AnnulusCharts& charts, long sheet, long m, const PadicContext& ctx);

// v(x - center) > radius.
struct DiscSpec {
  PadicNumber center;
  long radius = 0;
};

struct DiscCharts {
  int case_number = 0;  // branch points inside the disc: 0, 1 or 2
  ChartVerdict verdict = ChartVerdict::unparameterized;
  std::string detail;
  AnnulusSpec domain;
  std::vector<ChartMap> charts;
  std::optional<PadicNumber> a;  // two-point case: x = c + p^radius (z + a/(4z))
  long attained = 0;
};

DiscCharts parameterize_disc(const SuperellipticCurve& curve, const BranchLocus& locus, const DiscSpec& disc,
                             const PadicContext& ctx, long limit = LaurentSeries::kDefaultLimit);

// min over |n| <= limit/2 of v(coefficient of y^m - f(x)).
long chart_residual(const SuperellipticCurve& curve, const ChartMap& chart);

}  // namespace superchab
