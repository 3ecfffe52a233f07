#include "lrdcp/scores.hpp"

#include <algorithm>
#include <cmath>

#include "lrdcp/errors.hpp"
#include "lrdcp/normal.hpp"

namespace lrdcp {

double score_spec::h(double x) const {
  switch (kind) {
    case score_kind::wilcoxon:
      return x;
    case score_kind::van_der_waerden:
      return normal_quantile(x);
    case score_kind::median:
      return x > 0.5 ? 1.0 : (x < 0.5 ? -1.0 : 0.0);
    case score_kind::custom: {
      if (x <= xs.front()) return hs.front();
      if (x >= xs.back()) return hs.back();
      const auto it = std::upper_bound(xs.begin(), xs.end(), x);
      const std::size_t j = static_cast<std::size_t>(it - xs.begin());
      const double t = (x - xs[j - 1]) / (xs[j] - xs[j - 1]);
      return hs[j - 1] + t * (hs[j] - hs[j - 1]);
    }
  }
  throw domain_error("score_spec: unknown kind");
}

std::string score_spec::name() const {
  switch (kind) {
    case score_kind::wilcoxon: return "wilcoxon";
    case score_kind::van_der_waerden: return "vdw";
    case score_kind::median: return "median";
    case score_kind::custom: return "custom:" + custom_name;
  }
  return "?";
}

score_spec wilcoxon_scores() { return {score_kind::wilcoxon, {}, {}, {}}; }
score_spec van_der_waerden_scores() {
  return {score_kind::van_der_waerden, {}, {}, {}};
}
score_spec median_scores() { return {score_kind::median, {}, {}, {}}; }

score_spec custom_scores(std::vector<double> xs, std::vector<double> hs,
                         std::string name) {
  if (xs.size() != hs.size() || xs.size() < 2)
    throw domain_error("custom_scores: need >= 2 (x, h) pairs");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0.0 && xs[i] < 1.0))
      throw domain_error("custom_scores: x values must lie in (0,1)");
    if (i > 0 && !(xs[i] > xs[i - 1]))
      throw domain_error("custom_scores: x values must be strictly increasing");
  }
  score_spec spec;
  spec.kind = score_kind::custom;
  spec.xs = std::move(xs);
  spec.hs = std::move(hs);
  spec.custom_name = std::move(name);
  return spec;
}

std::vector<double> make_scores(const score_spec& spec, std::size_t n) {
  if (n == 0) throw domain_error("make_scores: n must be positive");
  std::vector<double> a(n);
  const double d = static_cast<double>(n) + 1.0;
  for (std::size_t i = 1; i <= n; ++i)
    a[i - 1] = spec.h(static_cast<double>(i) / d);
  return a;
}

namespace {

// Stieltjes sum of (min{x,1-x})^lambda against |dh| on a geometric grid with
// `per_octave` points per factor-of-two band and `depth` bands on each side.
double variation_sum(const score_spec& spec, double lambda, int per_octave,
                     int depth, std::size_t* points) {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(2 * per_octave * depth + 2));
  const int steps = per_octave * depth;
  for (int j = steps; j >= 0; --j)
    grid.push_back(std::exp2(-1.0 - static_cast<double>(j) / per_octave));
  for (int j = 1; j <= steps; ++j) {
    // stop once 1 - 2^(-1-j/p) rounds to 1.0: points past machine resolution
    // are duplicates, and h may be singular at the endpoint itself
    const double v = 1.0 - std::exp2(-1.0 - static_cast<double>(j) / per_octave);
    if (v >= 1.0) break;
    grid.push_back(v);
  }
  if (points) *points = grid.size();

  double acc = 0.0;
  double prev_x = grid.front();
  double prev_h = spec.h(prev_x);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double x = grid[i];
    const double hx = spec.h(x);
    const double mid = 0.5 * (prev_x + x);
    const double w = std::pow(std::min(mid, 1.0 - mid), lambda);
    acc += w * std::fabs(hx - prev_h);
    prev_x = x;
    prev_h = hx;
  }
  return acc;
}

}  // namespace

hbar_integral check_score_assumption(const score_spec& spec, double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0 / 3.0))
    throw domain_error("check_score_assumption: lambda must lie in (0, 1/3)");
  hbar_integral result;
  result.lambda = lambda;
  std::size_t points = 0;
  double prev = variation_sum(spec, lambda, 4, 10, &points);
  for (int level = 1; level <= 6; ++level) {
    const int per_octave = 4 << level;
    const int depth = 10 << level;
    const double cur = variation_sum(spec, lambda, per_octave, depth, &points);
    if (std::fabs(cur - prev) < 0.01 * std::fabs(cur)) {
      result.value = cur;
      result.converged = true;
      result.grid_points = points;
      return result;
    }
    prev = cur;
  }
  result.value = prev;
  result.converged = false;
  result.grid_points = points;
  return result;
}

}  // namespace lrdcp
