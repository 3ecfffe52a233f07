#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lrdcp/scores.hpp"

namespace lrdcp {

// Riemann-Stieltjes integral of g against the score-generating function h
// over (0,1).  Median scores give a point mass of size 2 at 1/2; Gaussian
// scores are handled by the substitution x = Phi(u); absolutely continuous h
// by direct quadrature.  Throws numerical_error when refinement fails.
double dh_integral(const std::function<double(double)>& g,
                   const score_spec& spec);

// What the ARE computation needs from a marginal model: the composition
// x -> J_r(F^{-}(x)) of the Hermite coefficient with the quantile function,
// the same composition for the density, and the Hermite rank.
struct are_marginal {
  std::function<double(double)> J_of_u;  // u in (0,1)
  std::function<double(double)> f_of_u;
  int hermite_rank = 1;
  std::string name;
};

// Gaussian marginal, rank 1: J_1(Phi^{-1}(u)) = -phi(Phi^{-1}(u)) and
// f(Phi^{-1}(u)) = phi(Phi^{-1}(u)).
are_marginal gaussian_are_marginal();

// Asymptotic relative efficiency of the test with scores h1 to the one with
// scores h2 under a local shift:
//   ARE = ( int J dh1 / int J dh2 ) * ( int f dh2 / int f dh1 ).
struct are_result {
  double ratio = 0.0;
  double j1 = 0.0, j2 = 0.0, f1 = 0.0, f2 = 0.0;  // the four integrals
  std::string score1, score2, marginal;
};

are_result are_ratio(const score_spec& s1, const score_spec& s2,
                     const are_marginal& marginal);

// Deterministic drift shape of the CuSum family under a level shift at tau:
// delta_tau(t) = t (1 - tau) for t <= tau, tau (1 - t) beyond.  Evaluated at
// t = j/(grid+1), j = 1..grid.
double delta_tau(double t, double tau);
std::vector<double> drift_curve(double tau, std::size_t grid);

}  // namespace lrdcp
