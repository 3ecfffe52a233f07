#include "lrdcp/marginals.hpp"

#include <cmath>

#include "lrdcp/errors.hpp"
#include "lrdcp/normal.hpp"

namespace lrdcp {

int marginal_spec::hermite_rank() const {
  return kind == marginal_kind::chisq ? 2 : 1;
}

double marginal_spec::transform(double t) const {
  switch (kind) {
    case marginal_kind::normal:
      return t;
    case marginal_kind::pareto: {
      // Standardized Pareto(alpha, k): subtract the mean alpha k/(alpha-1),
      // divide by the standard deviation; strictly decreasing in t.
      const double a = pareto_alpha, k = pareto_k;
      const double sd =
          std::sqrt(a * k * k / ((a - 1.0) * (a - 1.0) * (a - 2.0)));
      return (k * std::pow(normal_cdf(t), -1.0 / a) - a * k / (a - 1.0)) / sd;
    }
    case marginal_kind::cauchy:
      // tan(pi (Phi(t) - 1/2)): standard Cauchy, increasing.
      return std::tan(M_PI * (normal_cdf(t) - 0.5));
    case marginal_kind::chisq:
      // (t^2 - 1)/2: centered chi^2(1)/2, Hermite rank 2.
      return 0.5 * (t * t - 1.0);
  }
  throw domain_error("marginal_spec: unknown kind");
}

std::string marginal_spec::name() const {
  switch (kind) {
    case marginal_kind::normal: return "normal";
    case marginal_kind::pareto: return "pareto";
    case marginal_kind::cauchy: return "cauchy";
    case marginal_kind::chisq:  return "chisq";
  }
  return "?";
}

marginal_spec parse_marginal(const std::string& name) {
  marginal_spec spec;
  if (name == "normal") spec.kind = marginal_kind::normal;
  else if (name == "pareto") spec.kind = marginal_kind::pareto;
  else if (name == "cauchy") spec.kind = marginal_kind::cauchy;
  else if (name == "chisq") spec.kind = marginal_kind::chisq;
  else throw domain_error("unknown marginal '" + name + "'");
  return spec;
}

std::vector<double> subordinate(const std::vector<double>& gaussian,
                                const marginal_spec& spec) {
  if (spec.kind == marginal_kind::pareto) {
    if (!(spec.pareto_alpha > 2.0))
      throw domain_error("subordinate: pareto alpha must exceed 2");
    if (!(spec.pareto_k > 0.0))
      throw domain_error("subordinate: pareto k must be positive");
  }
  std::vector<double> out(gaussian.size());
  for (std::size_t i = 0; i < gaussian.size(); ++i)
    out[i] = spec.transform(gaussian[i]);
  return out;
}

std::vector<double> inject_shift(std::vector<double> x, const shift_spec& s) {
  if (!(s.tau >= 0.0 && s.tau <= 1.0))
    throw domain_error("inject_shift: tau must lie in [0,1]");
  const std::size_t cut =
      static_cast<std::size_t>(std::floor(static_cast<double>(x.size()) * s.tau));
  for (std::size_t i = cut; i < x.size(); ++i) x[i] += s.shift;
  return x;
}

}  // namespace lrdcp
