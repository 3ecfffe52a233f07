#include "lrdcp/detail/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace lrdcp::detail {

namespace {

gl_rule make_rule(int n) {
  gl_rule rule;
  rule.x.resize(n);
  rule.w.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi-style initial guess, then Newton on P_n.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    rule.x[i] = -x;
    rule.x[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.w[i] = w;
    rule.w[n - 1 - i] = w;
  }
  return rule;
}

}  // namespace

const gl_rule& gauss_legendre(int order) {
  static std::mutex mu;
  static std::map<int, gl_rule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, make_rule(order)).first;
  return it->second;
}

double gl_panels(const std::function<double(double)>& f, double a, double b,
                 int panels, int order) {
  const gl_rule& rule = gauss_legendre(order);
  const double h = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double mid = lo + 0.5 * h;
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.x.size(); ++i)
      acc += rule.w[i] * f(mid + 0.5 * h * rule.x[i]);
    total += 0.5 * h * acc;
  }
  return total;
}

double integrate_doubling(const std::function<double(double)>& f, double a,
                          double b, int panels0, int max_panels,
                          double rel_tol, double abs_tol, bool* converged) {
  double prev = gl_panels(f, a, b, panels0, 16);
  for (int panels = 2 * panels0; panels <= max_panels; panels *= 2) {
    const double cur = gl_panels(f, a, b, panels, 16);
    if (std::fabs(cur - prev) <= std::max(rel_tol * std::fabs(cur), abs_tol)) {
      if (converged) *converged = true;
      return cur;
    }
    prev = cur;
  }
  if (converged) *converged = false;
  return prev;
}

}  // namespace lrdcp::detail
