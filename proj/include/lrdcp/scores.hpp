#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace lrdcp {

// Score-generating function h on (0,1); rank scores are a(i) = h(i/(n+1)).
//   wilcoxon          h(x) = x
//   van_der_waerden   h(x) = Phi^{-1}(x)
//   median            h(x) = sign(x - 1/2)
//   custom            piecewise-linear through (xs, hs), clamped outside
enum class score_kind { wilcoxon, van_der_waerden, median, custom };

struct score_spec {
  score_kind kind = score_kind::wilcoxon;
  std::vector<double> xs, hs;  // custom only; xs strictly increasing in (0,1)
  std::string custom_name;     // label for reports

  double h(double x) const;
  std::string name() const;
};

score_spec wilcoxon_scores();
score_spec van_der_waerden_scores();
score_spec median_scores();
score_spec custom_scores(std::vector<double> xs, std::vector<double> hs,
                         std::string name = "custom");

// a(i) = h(i/(n+1)) for i = 1..n.
std::vector<double> make_scores(const score_spec& spec, std::size_t n);

// Weighted total-variation integral over (0,1):
//   integral of (min{x, 1-x})^lambda  d hbar(x),
// where hbar accumulates the variation of h away from 1/2.  Finite for every
// admissible score function; lambda must lie in (0, 1/3).  Evaluated as a
// Stieltjes sum on a geometric grid refined toward both endpoints; declared
// converged when doubling the refinement level changes the value by < 1%.
struct hbar_integral {
  double value = 0.0;
  bool converged = false;
  double lambda = 0.0;
  std::size_t grid_points = 0;
};

hbar_integral check_score_assumption(const score_spec& spec, double lambda);

}  // namespace lrdcp
