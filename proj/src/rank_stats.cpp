#include "lrdcp/rank_stats.hpp"

#include <algorithm>
#include <cmath>

#include "lrdcp/errors.hpp"

namespace lrdcp {

rank_vector ranks(std::span<const double> x) {
  const std::size_t n = x.size();
  rank_vector out;
  out.values.resize(n);
  std::vector<double> sorted(x.begin(), x.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (sorted[i] == sorted[i + 1]) {
      out.had_ties = true;
      break;
    }
  for (std::size_t i = 0; i < n; ++i)
    out.values[i] = static_cast<int>(
        std::upper_bound(sorted.begin(), sorted.end(), x[i]) - sorted.begin());
  return out;
}

namespace {

stat_trajectory finish(std::vector<double> values) {
  stat_trajectory t;
  t.values = std::move(values);
  t.max_abs = 0.0;
  t.argmax = 0;
  for (std::size_t k = 0; k < t.values.size(); ++k) {
    const double a = std::fabs(t.values[k]);
    if (a > t.max_abs) {
      t.max_abs = a;
      t.argmax = k + 1;
    }
  }
  if (t.argmax == 0 && !t.values.empty()) t.argmax = 1;  // all-zero path
  return t;
}

}  // namespace

stat_trajectory cusum_trajectory(std::span<const double> v) {
  const std::size_t n = v.size();
  if (n < 2) throw domain_error("cusum_trajectory: need at least 2 values");
  double total = 0.0;
  for (double x : v) total += x;
  std::vector<double> values(n - 1);
  double prefix = 0.0;
  for (std::size_t k = 1; k < n; ++k) {
    prefix += v[k - 1];
    values[k - 1] =
        prefix - (static_cast<double>(k) / static_cast<double>(n)) * total;
  }
  return finish(std::move(values));
}

stat_trajectory rank_cusum_trajectory(std::span<const double> x,
                                      const score_spec& spec, bool* had_ties) {
  const rank_vector r = ranks(x);
  if (had_ties) *had_ties = r.had_ties;
  const std::vector<double> a = make_scores(spec, x.size());
  std::vector<double> v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    v[i] = a[static_cast<std::size_t>(r.values[i]) - 1];
  return cusum_trajectory(v);
}

double rank_edf(const rank_vector& r, std::size_t k, double x) {
  if (k > r.values.size()) throw domain_error("rank_edf: k exceeds series length");
  const double d = static_cast<double>(r.values.size()) + 1.0;
  double count = 0.0;
  for (std::size_t i = 0; i < k; ++i)
    if (static_cast<double>(r.values[i]) / d <= x) count += 1.0;
  return count;
}

}  // namespace lrdcp
