#pragma once

#include <functional>
#include <vector>

namespace lrdcp::detail {

// Gauss-Legendre rule on [-1,1].  Nodes/weights by Newton iteration on the
// Legendre recurrence; accurate to machine precision for the orders used
// here.  Cached per order, thread-safe.
struct gl_rule {
  std::vector<double> x, w;
};
const gl_rule& gauss_legendre(int order);

// Composite rule: `panels` equal subintervals of [a,b], `order` points each.
double gl_panels(const std::function<double(double)>& f, double a, double b,
                 int panels, int order);

// Panel-doubling refinement starting from `panels0` until successive values
// agree to max(rel_tol * |value|, abs_tol).  Sets *converged.
double integrate_doubling(const std::function<double(double)>& f, double a,
                          double b, int panels0, int max_panels,
                          double rel_tol, double abs_tol, bool* converged);

}  // namespace lrdcp::detail
