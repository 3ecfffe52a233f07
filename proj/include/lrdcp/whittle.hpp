#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace lrdcp {

// Periodogram I(lambda_j) = |sum_t x_t exp(-i t lambda_j)|^2 / (2 pi n) at
// the Fourier frequencies lambda_j = 2 pi j / n, j = 1..count.
std::vector<double> periodogram(std::span<const double> x, std::size_t count);

// Local Whittle (Gaussian semiparametric) estimate of the Hurst index:
// minimizes
//   R(H) = log( (1/m) sum_j lambda_j^{2H-1} I(lambda_j) )
//        - (2H-1) (1/m) sum_j log lambda_j
// over H in [0.01, 0.99] to within 1e-6 (golden section; deterministic).
// bandwidth 0 picks the default m = floor(n^{2/3}); 2 <= m < n/2 required.
struct whittle_result {
  double hurst = 0.0;
  std::size_t bandwidth = 0;
  double asymptotic_sd = 0.0;  // 1 / (2 sqrt(m))
};

whittle_result local_whittle_H(std::span<const double> x,
                               std::size_t bandwidth = 0);

}  // namespace lrdcp
