#pragma once

#include "superchab/series.hpp"

namespace superchab {

// omega = sum a_n T^n dT/T splits as dF + a0 dT/T.
struct Antiderivative {
  LaurentSeries F;
  PadicNumber a0;
};

Antiderivative formal_antiderivative(const LaurentSeries& omega);

// (F(y) + a0 Log y) - (F(x) + a0 Log x) with the Log(p) = 0 branch.
PadicNumber bc_integral(const LaurentSeries& omega, const PadicNumber& x, const PadicNumber& y);

}  // namespace superchab
