#pragma once

#include <cstdint>
#include <vector>

#include "lrdcp/marginals.hpp"
#include "lrdcp/subsampling.hpp"

namespace lrdcp {

// One Monte Carlo experiment: fGn -> marginal transform -> optional shift,
// then every test at the same nominal level on the same replications.
struct sim_config {
  marginal_spec marginal;
  double hurst = 0.7;
  std::size_t n = 500;
  shift_spec shift;            // change point position and height
  std::size_t reps = 1000;
  block_spec block;
  std::vector<test_spec> tests;
  double level = 0.05;
  std::uint64_t seed = 1;
  unsigned threads = 0;        // 0: hardware concurrency
};

struct rejection_table {
  std::vector<std::string> test_labels;
  std::vector<std::size_t> rejections;  // per test
  std::size_t reps = 0;
  std::size_t block_length = 0;

  double rate(std::size_t t) const {
    return static_cast<double>(rejections[t]) / static_cast<double>(reps);
  }
};

// Replication r uses the generator stream (seed, r), so results are
// bit-identical for any thread count.
rejection_table run_simulation(const sim_config& cfg);

}  // namespace lrdcp
