#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lrdcp/csv.hpp"
#include "lrdcp/fgn.hpp"

namespace {

struct cli_result {
  int exit_code = -1;
  std::string out, err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

cli_result run_cli(const std::string& args) {
  const char* env = std::getenv("LRDCP_CLI");
  // ctest exports LRDCP_CLI; a bare ./unit_tests run from the build tree
  // falls back to the sibling binary
  const std::string bin = env ? env : "./lrdcp";
  const std::string cmd =
      bin + " " + args + " > cli_stdout.txt 2> cli_stderr.txt";
  const int status = std::system(cmd.c_str());
  cli_result r;
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  r.out = slurp("cli_stdout.txt");
  r.err = slurp("cli_stderr.txt");
  return r;
}

// value following "key: " in a key/value report
double field(const std::string& text, const std::string& key) {
  const std::string tag = key + ": ";
  const auto pos = text.find(tag);
  REQUIRE_MESSAGE(pos != std::string::npos, "missing field " << key);
  return std::strtod(text.c_str() + pos + tag.size(), nullptr);
}

void write_series(const std::string& path, const std::vector<double>& v) {
  std::vector<std::vector<std::string>> rows;
  for (double x : v) rows.push_back({lrdcp::format_double(x)});
  lrdcp::write_csv(path, {"x"}, rows);
}

}  // namespace

TEST_CASE("cli: efficiency ratios") {
  const cli_result r = run_cli("are --score1 wilcoxon --score2 vdw");
  CHECK(r.exit_code == 0);
  CHECK(field(r.out, "are") == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(field(r.out, "int_J_dh2") == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(r.out.find("score1: wilcoxon") != std::string::npos);

  CHECK(run_cli("are --score1 wilcoxon --score2 cusum").exit_code == 2);
  CHECK(run_cli("are --score1 wilcoxon").exit_code == 2);
}

TEST_CASE("cli: simulation is reproducible across thread counts") {
  const std::string base =
      "simulate --hurst 0.7 --n 60 --reps 8 --block 9 "
      "--tests wilcoxon,cusum --seed 3";
  const cli_result a = run_cli(base + " --threads 1 --out cli_sim_a.csv");
  CHECK(a.exit_code == 0);
  const cli_result b = run_cli(base + " --threads 4 --out cli_sim_b.csv");
  CHECK(b.exit_code == 0);
  CHECK(slurp("cli_sim_a.csv") == slurp("cli_sim_b.csv"));
  CHECK(a.out == b.out);

  const lrdcp::csv_table t = lrdcp::read_csv("cli_sim_a.csv");
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0][9] == "wilcoxon");
  CHECK(t.rows[1][9] == "cusum");
  for (const auto& row : t.rows) {
    const double rate = std::strtod(row[11].c_str(), nullptr);
    CHECK(rate >= 0.0);
    CHECK(rate <= 1.0);
  }
  std::remove("cli_sim_a.csv");
  std::remove("cli_sim_b.csv");
}

TEST_CASE("cli: testing a series from a file") {
  std::vector<double> v = lrdcp::simulate_fgn(60, 0.6, 11);
  for (std::size_t i = 30; i < v.size(); ++i) v[i] += 4.0;
  write_series("cli_series.csv", v);

  const cli_result r = run_cli(
      "test --input cli_series.csv --column x --block 9 --tests wilcoxon,cusum "
      "--out cli_report.csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("test: wilcoxon") != std::string::npos);
  CHECK(r.out.find("test: cusum") != std::string::npos);
  CHECK(field(r.out, "p_value") >= 0.0);
  CHECK(field(r.out, "block_length") == 9.0);

  const lrdcp::csv_table rep = lrdcp::read_csv("cli_report.csv");
  REQUIRE(rep.rows.size() == 2);
  CHECK(rep.header.size() == 11);
  std::remove("cli_report.csv");
  std::remove("cli_series.csv");
}

TEST_CASE("cli: trajectory dump") {
  write_series("cli_traj_in.csv", lrdcp::simulate_fgn(40, 0.7, 5));
  const cli_result r = run_cli(
      "trajectory --input cli_traj_in.csv --column x "
      "--tests wilcoxon,vdw,cusum --out cli_traj.csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("wilcoxon: max |T_k|") != std::string::npos);

  const lrdcp::csv_table t = lrdcp::read_csv("cli_traj.csv");
  CHECK(t.header ==
        std::vector<std::string>{"k", "label", "wilcoxon", "vdw", "cusum"});
  REQUIRE(t.rows.size() == 39);
  CHECK(t.rows.front()[0] == "1");
  CHECK(t.rows.back()[0] == "39");
  std::remove("cli_traj.csv");
  std::remove("cli_traj_in.csv");

  CHECK(run_cli("trajectory --input cli_traj_in.csv --column x").exit_code ==
        2);  // --out is required, and the input is gone anyway
}

TEST_CASE("cli: hurst estimation") {
  write_series("cli_hurst.csv", lrdcp::simulate_fgn(512, 0.8, 21));
  const cli_result r = run_cli("hurst --input cli_hurst.csv --column x");
  CHECK(r.exit_code == 0);
  const double h = field(r.out, "hurst");
  CHECK(h > 0.5);
  CHECK(h < 1.0);
  CHECK(field(r.out, "bandwidth") == 63.0);  // floor(512^(2/3))

  const cli_result fixed =
      run_cli("hurst --input cli_hurst.csv --column x --bandwidth 40");
  CHECK(fixed.exit_code == 0);
  CHECK(field(fixed.out, "bandwidth") == 40.0);
  CHECK(run_cli("hurst --input cli_hurst.csv --column x --bandwidth frog")
            .exit_code == 2);
  std::remove("cli_hurst.csv");
}

TEST_CASE("cli: ties produce a warning") {
  std::vector<double> v = lrdcp::simulate_fgn(30, 0.7, 2);
  v[3] = v[17];  // force a tie
  write_series("cli_ties.csv", v);
  const cli_result r =
      run_cli("test --input cli_ties.csv --column x --block 5 --tests wilcoxon");
  CHECK(r.exit_code == 0);
  CHECK(r.err.find("ties") != std::string::npos);
  std::remove("cli_ties.csv");
}

TEST_CASE("cli: error paths") {
  CHECK(run_cli("").exit_code == 2);  // a subcommand is required
  CHECK(run_cli("simulate --hurst 0.7 --reps 4").exit_code == 2);  // no --n
  CHECK(run_cli("simulate --hurst 0.7 --n 50 --reps 4 --marginal weibull")
            .exit_code == 2);
  CHECK(run_cli("simulate --hurst 0.7 --n 50 --reps 4 --block 2").exit_code ==
        2);
  CHECK(run_cli("test --input cli_missing.csv --column x").exit_code == 2);
}
