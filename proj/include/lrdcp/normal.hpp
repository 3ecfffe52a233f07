#pragma once

namespace lrdcp {

// Standard normal density.
double normal_pdf(double x);

// Standard normal distribution function Phi(x).  Absolute error is a few ulp
// (delegates to erfc), far below 1e-12 everywhere including the tails.
double normal_cdf(double x);

// Inverse of normal_cdf on (0,1).  Wichura's algorithm AS 241 (PPND16),
// relative error below 1e-15 over the full range.  Throws domain_error for
// p outside (0,1).
double normal_quantile(double p);

}  // namespace lrdcp
