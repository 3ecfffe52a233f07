#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lrdcp/scores.hpp"

namespace lrdcp {

// Partial sums of v over the (1-based, inclusive) segment j..k, centered at
// the segment mean: out[t-j] = sum_{h=j}^{t} ( v_h - mean(v_j..v_k) ).
std::vector<double> segment_partial_sums(std::span<const double> v,
                                         std::size_t j, std::size_t k);

// Self-normalized CuSum path of a sequence v:
//   T_k = ( P_k - (k/n) P_n ) / sqrt( (1/n) [ sum_{t<=k} S_{t;1,k}^2
//                                           + sum_{t>k}  S_{t;k+1,n}^2 ] )
// with P the plain prefix sums and S the segment-centered partial sums
// above.  Split points with a degenerate denominator (below
// 1e-12 * (max|v|^2 + 1)) contribute value 0 and are recorded.
struct sn_path {
  std::vector<double> values;           // T_k, k = 1..n-1
  double max_abs = 0.0;
  std::size_t argmax = 0;               // smallest maximizing k
  std::vector<std::size_t> degenerate_ks;
  bool had_ties = false;                // filled by sn_rank_stat
};

// Reference evaluation: two-pass centered sums per segment, O(n) per split.
sn_path sn_trajectory(std::span<const double> v);

// Same quantity from O(1)-per-split prefix aggregates (O(n) total); agrees
// with sn_trajectory to ~1e-8 and exists for long series.
sn_path sn_trajectory_incremental(std::span<const double> v);

// Self-normalized rank statistic: the path above applied to a(R_i).
sn_path sn_rank_stat(std::span<const double> x, const score_spec& spec);

// Self-normalized CuSum on the raw observations.
sn_path sn_cusum_stat(std::span<const double> x);

}  // namespace lrdcp
