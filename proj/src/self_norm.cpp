#include "lrdcp/self_norm.hpp"

#include <cmath>

#include "lrdcp/errors.hpp"
#include "lrdcp/rank_stats.hpp"

namespace lrdcp {

std::vector<double> segment_partial_sums(std::span<const double> v,
                                         std::size_t j, std::size_t k) {
  if (j < 1 || k > v.size() || j > k)
    throw domain_error("segment_partial_sums: need 1 <= j <= k <= n");
  const std::size_t len = k - j + 1;
  double mean = 0.0;
  for (std::size_t t = j - 1; t < k; ++t) mean += v[t];
  mean /= static_cast<double>(len);
  std::vector<double> out(len);
  double acc = 0.0;
  for (std::size_t t = 0; t < len; ++t) {
    acc += v[j - 1 + t] - mean;
    out[t] = acc;
  }
  return out;
}

namespace {

double degeneracy_threshold(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return 1e-12 * (m * m + 1.0);
}

sn_path finish(std::vector<double> values, std::vector<std::size_t> degenerate) {
  sn_path p;
  p.values = std::move(values);
  p.degenerate_ks = std::move(degenerate);
  for (std::size_t k = 0; k < p.values.size(); ++k) {
    const double a = std::fabs(p.values[k]);
    if (a > p.max_abs) {
      p.max_abs = a;
      p.argmax = k + 1;
    }
  }
  if (p.argmax == 0 && !p.values.empty()) p.argmax = 1;
  return p;
}

}  // namespace

sn_path sn_trajectory(std::span<const double> v) {
  const std::size_t n = v.size();
  if (n < 2) throw domain_error("sn_trajectory: need at least 2 values");
  const double dn = static_cast<double>(n);
  const double threshold = degeneracy_threshold(v);

  // Segment-centered sums are invariant under a global shift, so work on
  // globally centered values to keep the running sums small.
  double gmean = 0.0;
  for (double x : v) gmean += x;
  gmean /= dn;
  std::vector<double> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = v[i] - gmean;
  double total = 0.0;
  for (double x : c) total += x;

  std::vector<double> values(n - 1);
  std::vector<std::size_t> degenerate;
  double prefix = 0.0;
  for (std::size_t k = 1; k < n; ++k) {
    prefix += c[k - 1];
    const double num = prefix - (static_cast<double>(k) / dn) * total;

    // two-pass centered sums over each segment
    double acc = 0.0;
    {
      const double mean = prefix / static_cast<double>(k);
      double s = 0.0;
      for (std::size_t t = 0; t < k; ++t) {
        s += c[t] - mean;
        acc += s * s;
      }
    }
    {
      const double mean = (total - prefix) / static_cast<double>(n - k);
      double s = 0.0;
      for (std::size_t t = k; t < n; ++t) {
        s += c[t] - mean;
        acc += s * s;
      }
    }
    const double den = std::sqrt(acc / dn);
    if (den < threshold) {
      values[k - 1] = 0.0;
      degenerate.push_back(k);
    } else {
      values[k - 1] = num / den;
    }
  }
  return finish(std::move(values), std::move(degenerate));
}

sn_path sn_trajectory_incremental(std::span<const double> v) {
  const std::size_t n = v.size();
  if (n < 2) throw domain_error("sn_trajectory: need at least 2 values");
  const double dn = static_cast<double>(n);
  const double threshold = degeneracy_threshold(v);

  // Work on globally centered values: every segment-centered sum is
  // unchanged, but the prefix aggregates below stay small.
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= dn;

  // P[t] = centered prefix sum; A = sum P_t^2, A1 = sum P_t, B = sum t P_t.
  std::vector<double> P(n + 1, 0.0), A(n + 1, 0.0), A1(n + 1, 0.0),
      B(n + 1, 0.0);
  for (std::size_t t = 1; t <= n; ++t) {
    P[t] = P[t - 1] + (v[t - 1] - mean);
    A[t] = A[t - 1] + P[t] * P[t];
    A1[t] = A1[t - 1] + P[t];
    B[t] = B[t - 1] + static_cast<double>(t) * P[t];
  }
  auto sumsq_1_to = [](double q) { return q * (q + 1.0) * (2.0 * q + 1.0) / 6.0; };

  std::vector<double> values(n - 1);
  std::vector<std::size_t> degenerate;
  for (std::size_t k = 1; k < n; ++k) {
    const double dk = static_cast<double>(k);
    const double dq = static_cast<double>(n - k);
    const double num = P[k] - (dk / dn) * P[n];

    // left: sum_{t<=k} (P_t - (t/k) P_k)^2
    const double ck = P[k] / dk;
    const double left = A[k] - 2.0 * ck * B[k] + ck * ck * sumsq_1_to(dk);

    // right: sum_{t>k} (P_t - P_k - c (t-k))^2, c = (P_n - P_k)/(n-k)
    const double c = (P[n] - P[k]) / dq;
    const double SP = A1[n] - A1[k];
    const double ST = (B[n] - B[k]) - dk * SP;
    const double right = (A[n] - A[k]) - 2.0 * P[k] * SP - 2.0 * c * ST +
                         dq * P[k] * P[k] + 2.0 * c * P[k] * dq * (dq + 1.0) * 0.5 +
                         c * c * sumsq_1_to(dq);

    const double den = std::sqrt(std::max(left + right, 0.0) / dn);
    if (den < threshold) {
      values[k - 1] = 0.0;
      degenerate.push_back(k);
    } else {
      values[k - 1] = num / den;
    }
  }
  return finish(std::move(values), std::move(degenerate));
}

sn_path sn_rank_stat(std::span<const double> x, const score_spec& spec) {
  const rank_vector r = ranks(x);
  const std::vector<double> a = make_scores(spec, x.size());
  std::vector<double> v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    v[i] = a[static_cast<std::size_t>(r.values[i]) - 1];
  sn_path p = sn_trajectory(v);
  p.had_ties = r.had_ties;
  return p;
}

sn_path sn_cusum_stat(std::span<const double> x) { return sn_trajectory(x); }

}  // namespace lrdcp
