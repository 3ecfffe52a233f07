#include "lrdcp/efficiency.hpp"

#include <cmath>

#include "lrdcp/detail/quadrature.hpp"
#include "lrdcp/errors.hpp"
#include "lrdcp/normal.hpp"

namespace lrdcp {

namespace {

// Integral of f over the real line, expanding the truncation [-L, L] until
// the added tails stop mattering.  Used after the substitution x = Phi(u),
// which turns integrals over (0,1) with endpoint-concentrated mass into
// rapidly decaying ones.
double integrate_real_line(const std::function<double(double)>& f,
                           const char* what) {
  double prev = 0.0;
  for (double L = 8.0; L <= 64.0; L *= 2.0) {
    bool ok = false;
    const double cur =
        detail::integrate_doubling(f, -L, L, 16, 8192, 1e-8, 1e-12, &ok);
    if (!ok)
      throw numerical_error(std::string("dh_integral: quadrature for ") +
                            what + " did not converge");
    if (L > 8.0 && std::fabs(cur - prev) <= 1e-8 * std::fabs(cur) + 1e-12)
      return cur;
    prev = cur;
  }
  throw numerical_error(std::string("dh_integral: integral for ") + what +
                        " does not stabilize (divergent tail)");
}

}  // namespace

double dh_integral(const std::function<double(double)>& g,
                   const score_spec& spec) {
  switch (spec.kind) {
    case score_kind::wilcoxon:
      // dh = dx; substitute x = Phi(u) so endpoint singularities of g are
      // damped by the Gaussian factor.
      return integrate_real_line(
          [&g](double u) { return g(normal_cdf(u)) * normal_pdf(u); },
          "uniform scores");
    case score_kind::median:
      // h jumps by 2 at 1/2
      return 2.0 * g(0.5);
    case score_kind::van_der_waerden:
      // x = Phi(u): integral of g(Phi(u)) du over the real line.
      return integrate_real_line(
          [&g](double u) { return g(normal_cdf(u)); }, "Gaussian scores");
    case score_kind::custom: {
      // piecewise-linear h: sum of slope * int g over each panel
      double acc = 0.0;
      for (std::size_t j = 1; j < spec.xs.size(); ++j) {
        const double slope =
            (spec.hs[j] - spec.hs[j - 1]) / (spec.xs[j] - spec.xs[j - 1]);
        if (slope == 0.0) continue;
        bool ok = false;
        const double piece = detail::integrate_doubling(
            g, spec.xs[j - 1], spec.xs[j], 4, 1024, 1e-8, 1e-12, &ok);
        if (!ok)
          throw numerical_error("dh_integral: quadrature failed on custom panel");
        acc += slope * piece;
      }
      return acc;
    }
  }
  throw domain_error("dh_integral: unknown score kind");
}

are_marginal gaussian_are_marginal() {
  are_marginal m;
  m.name = "gaussian";
  m.hermite_rank = 1;
  // phi(Phi^{-1}(u)) -> 0 at both endpoints; return the limit once u has
  // been rounded onto them (deep quadrature tails do that).
  m.J_of_u = [](double u) {
    return (u <= 0.0 || u >= 1.0) ? 0.0 : -normal_pdf(normal_quantile(u));
  };
  m.f_of_u = [](double u) {
    return (u <= 0.0 || u >= 1.0) ? 0.0 : normal_pdf(normal_quantile(u));
  };
  return m;
}

are_result are_ratio(const score_spec& s1, const score_spec& s2,
                     const are_marginal& marginal) {
  are_result r;
  r.score1 = s1.name();
  r.score2 = s2.name();
  r.marginal = marginal.name;
  r.j1 = dh_integral(marginal.J_of_u, s1);
  r.j2 = dh_integral(marginal.J_of_u, s2);
  r.f1 = dh_integral(marginal.f_of_u, s1);
  r.f2 = dh_integral(marginal.f_of_u, s2);
  if (r.j2 == 0.0 || r.f1 == 0.0)
    throw numerical_error(
        std::string("are_ratio: vanishing normalization (") +
        (r.j2 == 0.0 ? "int J dh2 = 0" : "int f dh1 = 0") + ")");
  r.ratio = (r.j1 / r.j2) * (r.f2 / r.f1);
  return r;
}

double delta_tau(double t, double tau) {
  if (!(tau > 0.0 && tau < 1.0))
    throw domain_error("delta_tau: tau must lie in (0,1)");
  if (!(t >= 0.0 && t <= 1.0))
    throw domain_error("delta_tau: t must lie in [0,1]");
  return t <= tau ? t * (1.0 - tau) : tau * (1.0 - t);
}

std::vector<double> drift_curve(double tau, std::size_t grid) {
  if (grid == 0) throw domain_error("drift_curve: grid must be positive");
  std::vector<double> out(grid);
  const double d = static_cast<double>(grid) + 1.0;
  for (std::size_t j = 1; j <= grid; ++j)
    out[j - 1] = delta_tau(static_cast<double>(j) / d, tau);
  return out;
}

}  // namespace lrdcp
