#pragma once

#include <string>
#include <vector>

namespace lrdcp {

// Marginal distributions for subordinated-Gaussian models Y_i = G(xi_i).
// Each transform G is the one that maps a standard normal to the stated
// marginal; hermite_rank is the Hermite rank of G.
enum class marginal_kind { normal, pareto, cauchy, chisq };

struct marginal_spec {
  marginal_kind kind = marginal_kind::normal;
  double pareto_alpha = 3.0;  // requires alpha > 2 (finite variance)
  double pareto_k = 1.0;      // requires k > 0

  int hermite_rank() const;         // 1 except chisq (rank 2)
  double transform(double t) const; // G(t)
  std::string name() const;
};

marginal_spec parse_marginal(const std::string& name);

// Apply G elementwise to a Gaussian path.
std::vector<double> subordinate(const std::vector<double>& gaussian,
                                const marginal_spec& spec);

// Change point at relative position tau: entries with (1-based) index
// > floor(n * tau) are shifted by `shift`.
struct shift_spec {
  double tau = 0.5;   // in [0,1]
  double shift = 0.0;
};

std::vector<double> inject_shift(std::vector<double> x, const shift_spec& s);

// A univariate series plus optional per-observation labels (e.g. years).
struct time_series {
  std::vector<double> values;
  std::vector<std::string> labels;  // empty or same length as values
};

}  // namespace lrdcp
