#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "lrdcp/hermite.hpp"
#include "lrdcp/rng.hpp"

namespace lrdcp {

// Autocovariance of fractional Gaussian noise with unit variance:
//   gamma(k) = ( |k+1|^{2H} - 2|k|^{2H} + |k-1|^{2H} ) / 2.
// Requires hurst in (0,1).
double fgn_acvf(std::int64_t k, double hurst);
acvf_fn fgn_acvf_fn(double hurst);

// Exact sampler for stationary fGn of a fixed length: circulant embedding of
// the (2n-2)-periodic covariance diagonalized by FFT (Davies-Harte).  The
// eigenvalue setup is done once per (n, hurst); each draw costs one FFT.
// Create one sampler per thread.
class fgn_sampler {
 public:
  fgn_sampler(std::size_t n, double hurst);
  ~fgn_sampler();
  fgn_sampler(const fgn_sampler&) = delete;
  fgn_sampler& operator=(const fgn_sampler&) = delete;

  std::size_t length() const { return n_; }
  double hurst() const { return hurst_; }

  // Next sample path; consumes 2n-2 Gaussians from `gen` in a fixed order.
  std::vector<double> sample(rng& gen);

 private:
  struct impl;
  std::size_t n_;
  double hurst_;
  std::unique_ptr<impl> impl_;
};

// One-shot convenience: path of length n, deterministic in (n, hurst, seed).
std::vector<double> simulate_fgn(std::size_t n, double hurst,
                                 std::uint64_t seed);

}  // namespace lrdcp
