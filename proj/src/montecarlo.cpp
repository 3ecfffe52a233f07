#include "lrdcp/montecarlo.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "lrdcp/errors.hpp"
#include "lrdcp/fgn.hpp"
#include "lrdcp/rng.hpp"

namespace lrdcp {

rejection_table run_simulation(const sim_config& cfg) {
  if (cfg.reps == 0) throw domain_error("run_simulation: reps must be positive");
  if (cfg.tests.empty()) throw domain_error("run_simulation: no tests given");
  if (cfg.n < 10) throw domain_error("run_simulation: n must be >= 10");
  const std::size_t l = resolve_block(cfg.block, cfg.n);  // validate up front
  const std::size_t T = cfg.tests.size();

  unsigned threads = cfg.threads ? cfg.threads : std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  if (threads > cfg.reps) threads = static_cast<unsigned>(cfg.reps);

  // reject flags per (replication, test); filled independently of scheduling
  std::vector<unsigned char> flags(cfg.reps * T, 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;

  auto worker = [&]() {
    try {
      fgn_sampler sampler(cfg.n, cfg.hurst);
      for (;;) {
        const std::size_t r = next.fetch_add(1);
        if (r >= cfg.reps) break;
        rng gen = rng::stream(cfg.seed, r);
        std::vector<double> x = sampler.sample(gen);
        x = subordinate(x, cfg.marginal);
        if (cfg.shift.shift != 0.0) x = inject_shift(std::move(x), cfg.shift);
        for (std::size_t t = 0; t < T; ++t) {
          const test_report rep = run_test(x, cfg.tests[t], cfg.block, cfg.level);
          flags[r * T + t] = rep.reject ? 1 : 0;
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mu);
      if (!error) error = std::current_exception();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);

  rejection_table table;
  table.reps = cfg.reps;
  table.block_length = l;
  table.test_labels.reserve(T);
  table.rejections.assign(T, 0);
  for (const auto& t : cfg.tests) table.test_labels.push_back(t.label());
  for (std::size_t r = 0; r < cfg.reps; ++r)
    for (std::size_t t = 0; t < T; ++t) table.rejections[t] += flags[r * T + t];
  return table;
}

}  // namespace lrdcp
