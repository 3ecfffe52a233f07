#include "lrdcp/subsampling.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "lrdcp/errors.hpp"
#include "lrdcp/self_norm.hpp"

namespace lrdcp {

stat_fn test_spec::statistic() const {
  if (is_rank) {
    const score_spec s = score;
    return [s](std::span<const double> w) { return sn_rank_stat(w, s).max_abs; };
  }
  return [](std::span<const double> w) { return sn_cusum_stat(w).max_abs; };
}

test_spec rank_test(score_spec s) {
  test_spec t;
  t.is_rank = true;
  t.score = std::move(s);
  return t;
}

test_spec cusum_test() {
  test_spec t;
  t.is_rank = false;
  return t;
}

namespace {

score_spec load_custom_scores(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ingestion_error("cannot open score file '" + path + "'");
  std::vector<double> xs, hs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // allow comments and blank lines; values separated by comma or space
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    for (char& ch : line)
      if (ch == ',' || ch == '\t' || ch == ';') ch = ' ';
    std::istringstream ss(line);
    double x, h;
    if (!(ss >> x)) continue;
    if (!(ss >> h))
      throw ingestion_error("score file '" + path + "' line " +
                            std::to_string(lineno) + ": need (x, h) pair");
    xs.push_back(x);
    hs.push_back(h);
  }
  std::string name = path;
  const auto slash = name.find_last_of('/');
  if (slash != std::string::npos) name.erase(0, slash + 1);
  return custom_scores(std::move(xs), std::move(hs), std::move(name));
}

}  // namespace

test_spec parse_test(const std::string& name) {
  if (name == "cusum") return cusum_test();
  if (name == "wilcoxon") return rank_test(wilcoxon_scores());
  if (name == "vdw") return rank_test(van_der_waerden_scores());
  if (name == "median") return rank_test(median_scores());
  if (name.rfind("custom:", 0) == 0)
    return rank_test(load_custom_scores(name.substr(7)));
  throw domain_error("unknown test '" + name +
                     "' (expected wilcoxon|vdw|median|cusum|custom:<file>)");
}

std::vector<test_spec> parse_test_list(const std::string& csv) {
  std::vector<test_spec> out;
  std::string item;
  std::istringstream ss(csv);
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_test(item));
  }
  if (out.empty()) throw domain_error("empty test list");
  return out;
}

block_spec parse_block(const std::string& text) {
  block_spec b;
  if (text.rfind("gamma:", 0) == 0) {
    try {
      b.gamma = std::stod(text.substr(6));
    } catch (const std::exception&) {
      throw domain_error("bad block spec '" + text + "'");
    }
    if (!(b.gamma > 0.0 && b.gamma < 1.0))
      throw domain_error("block gamma must lie in (0,1)");
    return b;
  }
  try {
    const long v = std::stol(text);
    if (v < 1) throw domain_error("block length must be positive");
    b.length = static_cast<std::size_t>(v);
  } catch (const domain_error&) {
    throw;
  } catch (const std::exception&) {
    throw domain_error("bad block spec '" + text + "'");
  }
  return b;
}

std::size_t resolve_block(const block_spec& b, std::size_t n) {
  std::size_t l = b.length ? *b.length
                           : static_cast<std::size_t>(std::floor(
                                 std::pow(static_cast<double>(n), b.gamma)));
  if (l < 3)
    throw domain_error("block length " + std::to_string(l) +
                       " is too small (need >= 3)");
  if (l >= n)
    throw domain_error("block length " + std::to_string(l) +
                       " must be smaller than the series length " +
                       std::to_string(n));
  return l;
}

null_distribution subsample_distribution(std::span<const double> x,
                                         std::size_t l, const stat_fn& stat) {
  const std::size_t n = x.size();
  if (l < 2 || l >= n)
    throw domain_error("subsample_distribution: need 2 <= l < n");
  null_distribution dist;
  dist.block_length = l;
  dist.sorted_values.resize(n - l + 1);
  for (std::size_t k = 0; k + l <= n; ++k)
    dist.sorted_values[k] = stat(x.subspan(k, l));
  std::sort(dist.sorted_values.begin(), dist.sorted_values.end());
  return dist;
}

quantile_pvalue quantile_and_pvalue(const null_distribution& dist,
                                    double level, double observed) {
  if (dist.sorted_values.empty())
    throw domain_error("quantile_and_pvalue: empty distribution");
  if (!(level > 0.0 && level < 1.0))
    throw domain_error("quantile_and_pvalue: level must lie in (0,1)");
  const auto& v = dist.sorted_values;
  const std::size_t m = v.size();
  // smallest index with empirical cdf >= 1 - level
  std::size_t idx = static_cast<std::size_t>(
      std::ceil((1.0 - level) * static_cast<double>(m)));
  if (idx < 1) idx = 1;
  if (idx > m) idx = m;
  quantile_pvalue out;
  out.critical_value = v[idx - 1];
  const auto first_ge = std::lower_bound(v.begin(), v.end(), observed);
  out.p_value = static_cast<double>(v.end() - first_ge) / static_cast<double>(m);
  return out;
}

test_report run_test(std::span<const double> x, const test_spec& test,
                     const block_spec& block, double level) {
  const std::size_t n = x.size();
  if (n < 10) throw domain_error("run_test: series too short (need n >= 10)");
  if (!(level > 0.0 && level < 1.0))
    throw domain_error("run_test: level must lie in (0,1)");
  const std::size_t l = resolve_block(block, n);

  test_report rep;
  rep.statistic_name = test.label();
  rep.level = level;
  rep.block_length = l;
  rep.n = n;

  if (test.is_rank) {
    const sn_path p = sn_rank_stat(x, test.score);
    rep.observed = p.max_abs;
    rep.argmax_k = p.argmax;
    rep.had_ties = p.had_ties;
  } else {
    const sn_path p = sn_cusum_stat(x);
    rep.observed = p.max_abs;
    rep.argmax_k = p.argmax;
  }

  const null_distribution dist = subsample_distribution(x, l, test.statistic());
  rep.n_windows = dist.sorted_values.size();
  const quantile_pvalue qp = quantile_and_pvalue(dist, level, rep.observed);
  rep.critical_value = qp.critical_value;
  rep.p_value = qp.p_value;
  rep.reject = rep.observed > rep.critical_value;
  return rep;
}

}  // namespace lrdcp
