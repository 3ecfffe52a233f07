// lrdcp: change-point tests for long-range dependent series.
//
// Subcommands: simulate (Monte Carlo rejection rates), test (run the tests
// on a CSV column), trajectory (dump the self-normalized paths), hurst
// (local Whittle estimate), are (asymptotic relative efficiency).

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "lrdcp/csv.hpp"
#include "lrdcp/efficiency.hpp"
#include "lrdcp/errors.hpp"
#include "lrdcp/marginals.hpp"
#include "lrdcp/montecarlo.hpp"
#include "lrdcp/scores.hpp"
#include "lrdcp/self_norm.hpp"
#include "lrdcp/subsampling.hpp"
#include "lrdcp/whittle.hpp"

namespace {

using lrdcp::format_double;

struct simulate_options {
  std::string marginal = "normal";
  double hurst = 0.7;
  std::size_t n = 500;
  double tau = 0.5;
  double shift = 0.0;
  std::size_t reps = 1000;
  std::string block = "gamma:0.5";
  std::string tests = "wilcoxon,vdw,cusum";
  double level = 0.05;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  double pareto_alpha = 3.0;
  double pareto_k = 1.0;
  std::string out;
};

int run_simulate(const simulate_options& opt) {
  lrdcp::sim_config cfg;
  cfg.marginal = lrdcp::parse_marginal(opt.marginal);
  cfg.marginal.pareto_alpha = opt.pareto_alpha;
  cfg.marginal.pareto_k = opt.pareto_k;
  cfg.hurst = opt.hurst;
  cfg.n = opt.n;
  cfg.shift = {opt.tau, opt.shift};
  cfg.reps = opt.reps;
  cfg.block = lrdcp::parse_block(opt.block);
  cfg.tests = lrdcp::parse_test_list(opt.tests);
  cfg.level = opt.level;
  cfg.seed = opt.seed;
  cfg.threads = opt.threads;

  const lrdcp::rejection_table table = lrdcp::run_simulation(cfg);

  std::vector<std::string> header = {"marginal", "hurst",      "n",
                                     "tau",      "shift",      "level",
                                     "block_length", "seed",   "reps",
                                     "test",     "rejections", "rate"};
  std::vector<std::vector<std::string>> rows;
  for (std::size_t t = 0; t < table.test_labels.size(); ++t) {
    rows.push_back({cfg.marginal.name(), format_double(cfg.hurst),
                    std::to_string(cfg.n), format_double(cfg.shift.tau),
                    format_double(cfg.shift.shift), format_double(cfg.level),
                    std::to_string(table.block_length), std::to_string(cfg.seed),
                    std::to_string(table.reps), table.test_labels[t],
                    std::to_string(table.rejections[t]),
                    format_double(table.rate(t))});
  }
  if (!opt.out.empty()) lrdcp::write_csv(opt.out, header, rows);

  std::cout << "n=" << cfg.n << " hurst=" << format_double(cfg.hurst)
            << " marginal=" << cfg.marginal.name()
            << " tau=" << format_double(cfg.shift.tau)
            << " shift=" << format_double(cfg.shift.shift)
            << " block=" << table.block_length << " reps=" << table.reps
            << " level=" << format_double(cfg.level) << "\n";
  for (std::size_t t = 0; t < table.test_labels.size(); ++t)
    std::cout << table.test_labels[t] << ": " << table.rejections[t] << "/"
              << table.reps << " = " << format_double(table.rate(t)) << "\n";
  return 0;
}

struct series_options {
  std::string input;
  std::string column = "0";
  std::string label_column;
  bool log_returns = false;
  bool absolute = false;
};

lrdcp::time_series load(const series_options& opt) {
  return lrdcp::load_series(opt.input, opt.column, opt.label_column,
                            opt.log_returns, opt.absolute);
}

void add_series_flags(CLI::App* cmd, series_options* opt) {
  cmd->add_option("--input", opt->input, "input CSV file")->required();
  cmd->add_option("--column", opt->column,
                  "value column (header name or 0-based index)");
  cmd->add_option("--label-column", opt->label_column,
                  "optional label column (e.g. year)");
  cmd->add_flag("--log-returns", opt->log_returns,
                "analyze log(P_t / P_{t-1}) instead of raw values");
  cmd->add_flag("--abs", opt->absolute, "take absolute values (after returns)");
}

struct analyze_options {
  series_options series;
  std::string tests = "wilcoxon,vdw,cusum";
  std::string block = "gamma:0.5";
  double level = 0.05;
  std::string out;
};

int run_analyze(const analyze_options& opt) {
  const lrdcp::time_series series = load(opt.series);
  const std::vector<lrdcp::test_spec> tests = lrdcp::parse_test_list(opt.tests);
  const lrdcp::block_spec block = lrdcp::parse_block(opt.block);

  std::vector<std::vector<std::string>> rows;
  bool first = true;
  for (const auto& test : tests) {
    const lrdcp::test_report rep =
        lrdcp::run_test(series.values, test, block, opt.level);
    if (rep.had_ties)
      std::cerr << "warning: ties in the data; tied observations were given "
                   "their maximal rank\n";
    std::string argmax_label;
    if (!series.labels.empty() && rep.argmax_k >= 1 &&
        rep.argmax_k <= series.labels.size())
      argmax_label = series.labels[rep.argmax_k - 1];

    if (!first) std::cout << "\n";
    first = false;
    std::cout << "test: " << rep.statistic_name << "\n"
              << "n: " << rep.n << "\n"
              << "block_length: " << rep.block_length << "\n"
              << "windows: " << rep.n_windows << "\n"
              << "observed: " << format_double(rep.observed) << "\n"
              << "critical_value: " << format_double(rep.critical_value) << "\n"
              << "p_value: " << format_double(rep.p_value) << "\n"
              << "level: " << format_double(rep.level) << "\n"
              << "reject: " << (rep.reject ? "true" : "false") << "\n"
              << "argmax_k: " << rep.argmax_k << "\n";
    if (!argmax_label.empty())
      std::cout << "argmax_label: " << argmax_label << "\n";

    rows.push_back({rep.statistic_name, std::to_string(rep.n),
                    std::to_string(rep.block_length),
                    format_double(rep.observed),
                    format_double(rep.critical_value),
                    format_double(rep.p_value), format_double(rep.level),
                    rep.reject ? "true" : "false", std::to_string(rep.argmax_k),
                    argmax_label, rep.had_ties ? "true" : "false"});
  }
  if (!opt.out.empty())
    lrdcp::write_csv(opt.out,
                     {"test", "n", "block_length", "observed", "critical_value",
                      "p_value", "level", "reject", "argmax_k", "argmax_label",
                      "ties"},
                     rows);
  return 0;
}

struct trajectory_options {
  series_options series;
  std::string tests = "wilcoxon,vdw,cusum";
  std::string out;
};

int run_trajectory(const trajectory_options& opt) {
  const lrdcp::time_series series = load(opt.series);
  const std::vector<lrdcp::test_spec> tests = lrdcp::parse_test_list(opt.tests);
  if (series.values.size() < 2)
    throw lrdcp::domain_error("trajectory: need at least 2 observations");

  std::vector<std::string> header = {"k", "label"};
  std::vector<std::vector<double>> columns;
  for (const auto& test : tests) {
    header.push_back(test.label());
    lrdcp::sn_path p = test.is_rank
                           ? lrdcp::sn_rank_stat(series.values, test.score)
                           : lrdcp::sn_cusum_stat(series.values);
    if (p.had_ties)
      std::cerr << "warning: ties in the data; tied observations were given "
                   "their maximal rank\n";
    std::cout << test.label() << ": max |T_k| = " << format_double(p.max_abs)
              << " at k = " << p.argmax;
    if (!series.labels.empty() && p.argmax <= series.labels.size())
      std::cout << " (" << series.labels[p.argmax - 1] << ")";
    std::cout << "\n";
    columns.push_back(std::move(p.values));
  }

  std::vector<std::vector<std::string>> rows;
  const std::size_t n = series.values.size();
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<std::string> row;
    row.push_back(std::to_string(k));
    row.push_back(series.labels.empty() ? "" : series.labels[k - 1]);
    for (const auto& col : columns) row.push_back(format_double(col[k - 1]));
    rows.push_back(std::move(row));
  }
  lrdcp::write_csv(opt.out, header, rows);
  return 0;
}

struct hurst_options {
  series_options series;
  std::string bandwidth = "auto";
};

int run_hurst(const hurst_options& opt) {
  const lrdcp::time_series series = load(opt.series);
  std::size_t m = 0;
  if (opt.bandwidth != "auto") {
    try {
      const long v = std::stol(opt.bandwidth);
      if (v < 2) throw lrdcp::domain_error("bandwidth must be >= 2");
      m = static_cast<std::size_t>(v);
    } catch (const lrdcp::domain_error&) {
      throw;
    } catch (const std::exception&) {
      throw lrdcp::domain_error("bad bandwidth '" + opt.bandwidth + "'");
    }
  }
  const lrdcp::whittle_result r = lrdcp::local_whittle_H(series.values, m);
  std::cout << "hurst: " << format_double(r.hurst) << "\n"
            << "bandwidth: " << r.bandwidth << "\n"
            << "asymptotic_sd: " << format_double(r.asymptotic_sd) << "\n";
  return 0;
}

struct are_options {
  std::string score1, score2;
  std::string marginal = "gaussian";
};

int run_are(const are_options& opt) {
  if (opt.marginal != "gaussian")
    throw lrdcp::domain_error("are: only the gaussian marginal is supported");
  const lrdcp::test_spec t1 = lrdcp::parse_test(opt.score1);
  const lrdcp::test_spec t2 = lrdcp::parse_test(opt.score2);
  if (!t1.is_rank || !t2.is_rank)
    throw lrdcp::domain_error("are: scores must be rank score functions");
  const lrdcp::are_result r =
      lrdcp::are_ratio(t1.score, t2.score, lrdcp::gaussian_are_marginal());
  std::cout << "score1: " << r.score1 << "\n"
            << "score2: " << r.score2 << "\n"
            << "marginal: " << r.marginal << "\n"
            << "are: " << format_double(r.ratio) << "\n"
            << "int_J_dh1: " << format_double(r.j1) << "\n"
            << "int_J_dh2: " << format_double(r.j2) << "\n"
            << "int_f_dh1: " << format_double(r.f1) << "\n"
            << "int_f_dh2: " << format_double(r.f2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank and CuSum change-point tests for long-range dependent "
               "time series"};
  app.require_subcommand(1);

  simulate_options sim_opt;
  CLI::App* sim = app.add_subcommand("simulate", "Monte Carlo rejection rates");
  sim->add_option("--marginal", sim_opt.marginal,
                  "normal|pareto|cauchy|chisq");
  sim->add_option("--hurst", sim_opt.hurst, "Hurst index in (0,1)")->required();
  sim->add_option("--n", sim_opt.n, "series length")->required();
  sim->add_option("--tau", sim_opt.tau, "change point position in [0,1]");
  sim->add_option("--shift", sim_opt.shift, "shift height after the change");
  sim->add_option("--reps", sim_opt.reps, "Monte Carlo replications")->required();
  sim->add_option("--block", sim_opt.block, "block length: N or gamma:F");
  sim->add_option("--tests", sim_opt.tests,
                  "comma list: wilcoxon|vdw|median|cusum|custom:<file>");
  sim->add_option("--level", sim_opt.level, "nominal level");
  sim->add_option("--seed", sim_opt.seed, "master seed");
  sim->add_option("--threads", sim_opt.threads, "worker threads (0 = auto)");
  sim->add_option("--pareto-alpha", sim_opt.pareto_alpha, "Pareto tail index");
  sim->add_option("--pareto-k", sim_opt.pareto_k, "Pareto scale");
  sim->add_option("--out", sim_opt.out, "write rates as CSV");

  analyze_options an_opt;
  CLI::App* an = app.add_subcommand("test", "run the tests on a CSV column");
  add_series_flags(an, &an_opt.series);
  an->add_option("--tests", an_opt.tests,
                 "comma list: wilcoxon|vdw|median|cusum|custom:<file>");
  an->add_option("--block", an_opt.block, "block length: N or gamma:F");
  an->add_option("--level", an_opt.level, "nominal level");
  an->add_option("--out", an_opt.out, "write reports as CSV");

  trajectory_options tr_opt;
  CLI::App* tr = app.add_subcommand("trajectory",
                                    "write the self-normalized paths as CSV");
  add_series_flags(tr, &tr_opt.series);
  tr->add_option("--tests", tr_opt.tests,
                 "comma list: wilcoxon|vdw|median|cusum|custom:<file>");
  tr->add_option("--out", tr_opt.out, "output CSV")->required();

  hurst_options hu_opt;
  CLI::App* hu = app.add_subcommand("hurst", "local Whittle Hurst estimate");
  add_series_flags(hu, &hu_opt.series);
  hu->add_option("--bandwidth", hu_opt.bandwidth,
                 "number of frequencies, or 'auto' for floor(n^(2/3))");

  are_options are_opt;
  CLI::App* ar = app.add_subcommand("are", "asymptotic relative efficiency");
  ar->add_option("--score1", are_opt.score1, "wilcoxon|vdw|median")->required();
  ar->add_option("--score2", are_opt.score2, "wilcoxon|vdw|median")->required();
  ar->add_option("--marginal", are_opt.marginal, "marginal model (gaussian)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sim->parsed()) return run_simulate(sim_opt);
    if (an->parsed()) return run_analyze(an_opt);
    if (tr->parsed()) return run_trajectory(tr_opt);
    if (hu->parsed()) return run_hurst(hu_opt);
    if (ar->parsed()) return run_are(are_opt);
  } catch (const lrdcp::numerical_error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const lrdcp::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
