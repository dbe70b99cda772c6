#pragma once

namespace walkmax {

/// Standard normal upper tail P(Z > x).
double normal_survival(double x);

/// Standard normal CDF P(Z <= x).
double normal_cdf(double x);

/// Inverse of normal_cdf (AS 241, PPND16 accuracy).
double inverse_normal_cdf(double p);

}  // namespace walkmax
