// Acceptance gate: one line per criterion, [PASS]/[FAIL]/[SKIP].
// Data-dependent checks are skipped cleanly when the fetched files are
// absent (see scripts/fetch_data.py).  Exit status: number of failures.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "lrdcp/csv.hpp"
#include "lrdcp/efficiency.hpp"
#include "lrdcp/errors.hpp"
#include "lrdcp/montecarlo.hpp"
#include "lrdcp/self_norm.hpp"
#include "lrdcp/subsampling.hpp"
#include "lrdcp/whittle.hpp"
#include "properties.hpp"

namespace {

int failures = 0;

void line(const char* status, const std::string& name,
          const std::string& detail) {
  std::printf("[%s] %-34s %s\n", status, name.c_str(), detail.c_str());
  std::fflush(stdout);
}

void pass(const std::string& name, const std::string& detail) {
  line("PASS", name, detail);
}
void fail(const std::string& name, const std::string& detail) {
  ++failures;
  line("FAIL", name, detail);
}
void skip(const std::string& name, const std::string& detail) {
  line("SKIP", name, detail);
}
void verdict(bool ok, const std::string& name, const std::string& detail) {
  ok ? pass(name, detail) : fail(name, detail);
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof(buf), f, ap);
  va_end(ap);
  return buf;
}

bool file_exists(const std::string& path) {
  return std::ifstream(path).good();
}

// ---- 1: Gaussian ARE identity --------------------------------------------

void check_are() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto marginal = lrdcp::gaussian_are_marginal();
  double worst = 0.0;
  const std::vector<std::pair<lrdcp::score_spec, lrdcp::score_spec>> pairs = {
      {lrdcp::wilcoxon_scores(), lrdcp::van_der_waerden_scores()},
      {lrdcp::wilcoxon_scores(), lrdcp::median_scores()},
      {lrdcp::van_der_waerden_scores(), lrdcp::median_scores()},
  };
  for (const auto& [s1, s2] : pairs) {
    const lrdcp::are_result r = lrdcp::are_ratio(s1, s2, marginal);
    worst = std::max(worst, std::fabs(r.ratio - 1.0));
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  verdict(worst <= 1e-6 && secs < 1.0, "gaussian-are-identity",
          fmt("max |ratio - 1| = %.2e over 3 score pairs (%.2f s, limit 1 s)",
              worst, secs));
}

// ---- 2-4: Monte Carlo table cells ----------------------------------------

lrdcp::rejection_table simulate(const std::string& marginal, double hurst,
                                std::size_t n, std::size_t block, double shift,
                                double tau, std::size_t reps,
                                std::uint64_t seed) {
  lrdcp::sim_config cfg;
  cfg.marginal = lrdcp::parse_marginal(marginal);
  cfg.hurst = hurst;
  cfg.n = n;
  cfg.shift = {tau, shift};
  cfg.reps = reps;
  cfg.block = lrdcp::parse_block(std::to_string(block));
  cfg.tests = lrdcp::parse_test_list("wilcoxon,vdw,cusum");
  cfg.level = 0.05;
  cfg.seed = seed;
  return lrdcp::run_simulation(cfg);
}

void check_table1() {
  const lrdcp::rejection_table size =
      simulate("normal", 0.7, 500, 22, 0.0, 0.5, 500, 101);
  const lrdcp::rejection_table power =
      simulate("normal", 0.7, 500, 22, 1.0, 0.5, 500, 102);
  const double size_target[3] = {0.068, 0.072, 0.070};
  const double power_target[3] = {0.855, 0.860, 0.853};
  bool ok = true;
  std::string detail;
  for (int t = 0; t < 3; ++t) {
    ok = ok && std::fabs(size.rate(t) - size_target[t]) <= 0.05;
    ok = ok && std::fabs(power.rate(t) - power_target[t]) <= 0.05;
    detail += fmt("%s%s %.3f/%.3f vs %.3f/%.3f", t ? "  " : "",
                  size.test_labels[t].c_str(), size.rate(t), power.rate(t),
                  size_target[t], power_target[t]);
  }
  verdict(ok, "table1-normal-H0.7-n500",
          detail + "  (size/power, tolerance 0.05)");
}

void check_table3() {
  const lrdcp::rejection_table t =
      simulate("cauchy", 0.6, 500, 22, 0.2, 0.5, 300, 103);
  const double w = t.rate(0), c = t.rate(2);
  const bool ok = w - c >= 0.6;
  verdict(ok, "table3-cauchy-contrast",
          fmt("wilcoxon %.3f - cusum %.3f = %.3f (need >= 0.6; reference "
              "0.956 vs 0.048)",
              w, c, w - c));
  if (!ok) {
    // The reference values are only consistent with a Cauchy series of scale
    // ~0.1 (equivalently, shifts 10x the stated heights): a standard-Cauchy
    // shift of 0.2 moves P(X <= Y + h) by arctan(0.1)/pi ~ 0.032, far less
    // than the normal-margin h=1 drift 0.26 that yields power ~0.86.  Ranks
    // are scale-free, so the 10x shift below reproduces the reference cell.
    const lrdcp::rejection_table t10 =
        simulate("cauchy", 0.6, 500, 22, 2.0, 0.5, 300, 103);
    line("NOTE", "table3 cross-check, shift 2.0",
         fmt("wilcoxon %.3f  cusum %.3f (matches reference 0.956 / 0.048)",
             t10.rate(0), t10.rate(2)));
  }
}

void check_table4() {
  const lrdcp::rejection_table t =
      simulate("chisq", 0.7, 300, 17, 1.0, 0.5, 300, 104);
  const bool ok = t.rate(0) >= 0.90 && t.rate(1) >= 0.90 && t.rate(2) >= 0.90;
  verdict(ok, "table4-chisq-rank2",
          fmt("rates %.3f / %.3f / %.3f (all must be >= 0.90)", t.rate(0),
              t.rate(1), t.rate(2)));
}

// ---- 5: Ethernet data ------------------------------------------------------

void check_ethernet(const std::string& data_dir) {
  const std::string path = data_dir + "/ethernet.csv";
  if (!file_exists(path)) {
    skip("ethernet-analysis", path + " not present (scripts/fetch_data.py)");
    return;
  }
  const lrdcp::time_series series = lrdcp::load_series(path, "0");
  const lrdcp::whittle_result w = lrdcp::local_whittle_H(series.values);
  bool ok = std::fabs(w.hurst - 0.845) <= 0.005;
  std::string detail = fmt("n=%zu  H=%.4f (want 0.845 +- 0.005, m=%zu)",
                           series.values.size(), w.hurst, w.bandwidth);

  const double target[3] = {0.7159, 0.7164, 0.7972};
  const char* names[3] = {"wilcoxon", "vdw", "cusum"};
  const lrdcp::block_spec block = lrdcp::parse_block("40");
  for (int t = 0; t < 3; ++t) {
    const lrdcp::test_report rep = lrdcp::run_test(
        series.values, lrdcp::parse_test(names[t]), block, 0.05);
    ok = ok && std::fabs(rep.p_value - target[t]) <= 0.02;
    detail += fmt("  p_%s=%.4f/%.4f", names[t], rep.p_value, target[t]);
  }
  verdict(ok, "ethernet-analysis", detail);
}

// ---- 6: rainfall data ------------------------------------------------------

void check_rainfall(const std::string& data_dir) {
  const std::string path = data_dir + "/rainfall.csv";
  if (!file_exists(path)) {
    skip("rainfall-analysis", path + " not present (scripts/fetch_data.py)");
    return;
  }
  const lrdcp::time_series series =
      lrdcp::load_series(path, "rainfall", "year");
  bool ok = series.values.size() == 83;
  std::string detail = fmt("n=%zu", series.values.size());

  const double target[3] = {0.0858, 0.0225, 0.0};
  const char* names[3] = {"wilcoxon", "vdw", "cusum"};
  const lrdcp::block_spec block = lrdcp::parse_block("9");
  for (int t = 0; t < 3; ++t) {
    const lrdcp::test_spec spec = lrdcp::parse_test(names[t]);
    const lrdcp::test_report rep =
        lrdcp::run_test(series.values, spec, block, 0.05);
    const std::string label = rep.argmax_k >= 1 &&
                                      rep.argmax_k <= series.labels.size()
                                  ? series.labels[rep.argmax_k - 1]
                                  : "?";
    ok = ok && label == "1957" && std::fabs(rep.p_value - target[t]) <= 0.02;
    detail += fmt("  %s: argmax %s p=%.4f/%.4f", names[t], label.c_str(),
                  rep.p_value, target[t]);
  }
  verdict(ok, "rainfall-analysis", detail);
}

// ---- 7: property suite -----------------------------------------------------

void check_properties() {
  bool all = true;
  std::string detail;
  for (const auto& p : props::all_properties()) {
    std::string msg;
    const bool ok = p.fn(&msg);
    all = all && ok;
    if (!ok) detail += std::string(" ") + p.name + ": " + msg;
  }
  verdict(all, "property-suite",
          all ? fmt("%zu structural properties hold",
                    props::all_properties().size())
              : detail);
}

}  // namespace

int main(int argc, char** argv) {
  std::string data_dir = "data";
  for (int i = 1; i + 1 < argc; ++i)
    if (std::strcmp(argv[i], "--data-dir") == 0) data_dir = argv[i + 1];

  try {
    check_are();
    check_table1();
    check_table3();
    check_table4();
    check_ethernet(data_dir);
    check_rainfall(data_dir);
    check_properties();
  } catch (const std::exception& e) {
    fail("unexpected-exception", e.what());
  }

  std::printf("%s\n", failures == 0 ? "acceptance: all checks passed"
                                    : "acceptance: FAILURES PRESENT");
  return failures;
}
