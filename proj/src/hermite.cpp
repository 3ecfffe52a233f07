#include "lrdcp/hermite.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "lrdcp/detail/quadrature.hpp"
#include "lrdcp/errors.hpp"
#include "lrdcp/normal.hpp"

namespace lrdcp {

double hermite_poly(int r, double x) {
  if (r < 0) throw domain_error("hermite_poly: order must be >= 0");
  if (r == 0) return 1.0;
  double p0 = 1.0, p1 = x;
  for (int j = 1; j < r; ++j) {
    const double p2 = x * p1 - j * p0;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

acvf_fn iid_acvf() {
  return [](std::int64_t k) { return k == 0 ? 1.0 : 0.0; };
}

double scaling_dnr(const acvf_fn& acvf, std::int64_t n, int r) {
  if (n < 1) throw domain_error("scaling_dnr: n must be >= 1");
  if (r < 1) throw domain_error("scaling_dnr: Hermite rank must be >= 1");
  double fact = 1.0;
  for (int j = 2; j <= r; ++j) fact *= j;
  double sum = static_cast<double>(n) * std::pow(acvf(0), r);
  for (std::int64_t k = 1; k < n; ++k)
    sum += 2.0 * static_cast<double>(n - k) * std::pow(acvf(k), r);
  double var = fact * sum;
  if (var < -1e-9)
    throw numerical_error("scaling_dnr: variance accumulated to " +
                          std::to_string(var) +
                          "; autocovariance is not positive semi-definite");
  if (var < 0.0) var = 0.0;
  return std::sqrt(var);
}

namespace {

// Root of g(u) = x on [lo,hi] for monotone g, by bisection.
double invert_monotone(const std::function<double(double)>& g, bool increasing,
                       double x, double lo, double hi) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const bool below = increasing ? (g(mid) <= x) : (g(mid) >= x);
    if (below)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-13 * (1.0 + std::fabs(lo))) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double hermite_expectation_over(double lo, double hi, int r) {
  if (r < 1) throw domain_error("hermite_expectation_over: rank must be >= 1");
  // Integrand decays like phi; beyond |u| = 10 + r the contribution is far
  // below the 1e-8 stopping tolerance for small r.
  const double cut = 10.0 + r;
  lo = std::max(lo, -cut);
  hi = std::min(hi, cut);
  if (!(lo < hi)) return 0.0;
  auto f = [r](double u) { return hermite_poly(r, u) * normal_pdf(u); };
  bool converged = false;
  // 4 panels x 16 nodes = 64 points, doubled up to 256.
  const double val =
      detail::integrate_doubling(f, lo, hi, 4, 16, 1e-8, 1e-12, &converged);
  if (!converged)
    throw numerical_error(
        "hermite_expectation_over: quadrature did not converge on [" +
        std::to_string(lo) + "," + std::to_string(hi) + "], r=" +
        std::to_string(r));
  return val;
}

double hermite_coefficient(const monotone_transform& G, int r, double x) {
  if (r < 1) throw domain_error("hermite_coefficient: rank must be >= 1");
  if (!G.g) throw domain_error("hermite_coefficient: missing transform");
  const double lo = -40.0, hi = 40.0;
  if (G.increasing) {
    // {G(xi) <= x} = {xi <= b}
    if (G.g(lo) > x) return 0.0;                        // empty region
    if (G.g(hi) <= x) return 0.0;                       // full region, E H_r = 0
    const double b = invert_monotone(G.g, true, x, lo, hi);
    return hermite_expectation_over(-std::numeric_limits<double>::infinity(), b, r);
  }
  // decreasing: {G(xi) <= x} = {xi >= b}
  if (G.g(hi) > x) return 0.0;
  if (G.g(lo) <= x) return 0.0;
  const double b = invert_monotone(G.g, false, x, lo, hi);
  return hermite_expectation_over(b, std::numeric_limits<double>::infinity(), r);
}

}  // namespace lrdcp
