#pragma once

namespace sketchlab {

// Standard normal CDF, abs error well below 1e-9.
double normal_cdf(double z);

// Standard normal quantile (AS 241, PPND16). p must lie in (0, 1).
double normal_quantile(double p);

// Upper-tail probability of the chi-square distribution at x with df
// degrees of freedom; df >= 1. x <= 0 yields 1.
double chi_square_sf(double x, int df);

// Regularized incomplete gamma functions P(a,x) and Q(a,x) = 1 - P(a,x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

}  // namespace sketchlab
