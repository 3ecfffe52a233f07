#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lrdcp/scores.hpp"

namespace lrdcp {

// Ranks R_i = #{ j : X_j <= X_i }; tied observations share their maximal
// rank.  had_ties flags whether any were present.
struct rank_vector {
  std::vector<int> values;
  bool had_ties = false;
};

rank_vector ranks(std::span<const double> x);

// A CuSum-type path over split points k = 1..n-1 (values[k-1] holds the
// value at k), together with max_k |value| and the smallest maximizing k.
struct stat_trajectory {
  std::vector<double> values;
  double max_abs = 0.0;
  std::size_t argmax = 0;  // 1-based split index
};

// Centered partial sums of an arbitrary sequence v:
//   values[k-1] = sum_{i<=k} v_i - (k/n) sum_{i<=n} v_i.
stat_trajectory cusum_trajectory(std::span<const double> v);

// Rank CuSum: cusum_trajectory applied to a(R_i) with a = make_scores(spec,n).
// Two-sample view of the same quantity: for k fixed it equals
//   sum_{i<=k} sum_{j>k} ( 1{X_j <= X_i} - 1/2 ) / (n+1)     (Wilcoxon scores,
// no ties); ranks make that O(n log n) instead of O(n^2).
stat_trajectory rank_cusum_trajectory(std::span<const double> x,
                                      const score_spec& spec,
                                      bool* had_ties = nullptr);

// Sequential empirical distribution of normalized ranks:
//   count_{i<=k} 1{ R_i/(n+1) <= x }.
double rank_edf(const rank_vector& r, std::size_t k, double x);

}  // namespace lrdcp
