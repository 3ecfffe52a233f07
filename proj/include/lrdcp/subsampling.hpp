#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lrdcp/scores.hpp"

namespace lrdcp {

// Statistic evaluated on a (sub)series.
using stat_fn = std::function<double(std::span<const double>)>;

// A change-point test: either a self-normalized rank statistic under some
// score function, or the self-normalized CuSum on the raw values.
struct test_spec {
  bool is_rank = true;
  score_spec score;  // meaningful when is_rank

  std::string label() const { return is_rank ? score.name() : "cusum"; }
  stat_fn statistic() const;  // max_k |T_k| on a window
};

test_spec rank_test(score_spec s);
test_spec cusum_test();
test_spec parse_test(const std::string& name);               // wilcoxon|vdw|median|cusum|custom:<file>
std::vector<test_spec> parse_test_list(const std::string& csv);

// Block length: either fixed, or floor(n^gamma).
struct block_spec {
  std::optional<std::size_t> length;
  double gamma = 0.5;
};
block_spec parse_block(const std::string& text);  // "22" or "gamma:0.5"
std::size_t resolve_block(const block_spec& b, std::size_t n);

// Sampling-window distribution: the statistic on every window of length l
// (all n-l+1 of them), sorted.
struct null_distribution {
  std::vector<double> sorted_values;
  std::size_t block_length = 0;
};

null_distribution subsample_distribution(std::span<const double> x,
                                         std::size_t l, const stat_fn& stat);

// Critical value: smallest order statistic t with F_hat(t) >= 1 - level
// (right-continuous generalized inverse).  p-value: fraction of window
// statistics >= observed (weak inequality).
struct quantile_pvalue {
  double critical_value = 0.0;
  double p_value = 0.0;
};

quantile_pvalue quantile_and_pvalue(const null_distribution& dist,
                                    double level, double observed);

// Full test: statistic on the whole series, subsampling null distribution,
// rejection by strict exceedance of the critical value.
struct test_report {
  std::string statistic_name;
  double observed = 0.0;
  double p_value = 0.0;
  double critical_value = 0.0;
  double level = 0.0;
  bool reject = false;
  std::size_t argmax_k = 0;      // smallest maximizing split of the full path
  std::size_t block_length = 0;
  std::size_t n_windows = 0;
  std::size_t n = 0;
  bool had_ties = false;
};

test_report run_test(std::span<const double> x, const test_spec& test,
                     const block_spec& block, double level);

}  // namespace lrdcp
