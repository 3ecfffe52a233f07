#pragma once

#include <cstdint>
#include <functional>

namespace lrdcp {

// Probabilists' Hermite polynomial H_r(x): H_0 = 1, H_1 = x,
// H_{r+1}(x) = x H_r(x) - r H_{r-1}(x).
double hermite_poly(int r, double x);

// Stationary autocovariance as a function of the (signed) lag.
using acvf_fn = std::function<double(std::int64_t)>;

// White-noise autocovariance: 1 at lag 0, else 0.
acvf_fn iid_acvf();

// Normalizing sequence d_{n,r} with
//   d_{n,r}^2 = Var( sum_{i=1}^n H_r(xi_i) ) = r! * sum_{|k|<n} (n-|k|) acvf(k)^r,
// evaluated exactly from the autocovariance (no asymptotic shortcut).
// Negative accumulations beyond -1e-9 raise numerical_error; tiny negative
// round-off is clamped to zero.
double scaling_dnr(const acvf_fn& acvf, std::int64_t n, int r);

// A monotone map applied to a standard normal variable.
struct monotone_transform {
  std::function<double(double)> g;
  bool increasing = true;
};

// Hermite coefficient J_r(G;x) = E[ 1{G(xi) <= x} H_r(xi) ] for xi ~ N(0,1),
// r >= 1.  The indicator boundary is located by inverting G (bisection), and
// the remaining smooth integral H_r(u) phi(u) du is evaluated by quadrature
// with node doubling (64 -> 128 -> 256) and a 1e-8 relative stopping rule.
double hermite_coefficient(const monotone_transform& G, int r, double x);

// E[ 1{lo <= xi <= hi} H_r(xi) ], r >= 1.  Building block for transforms
// whose level sets are intervals (e.g. even maps like (t^2-1)/2).
double hermite_expectation_over(double lo, double hi, int r);

}  // namespace lrdcp
