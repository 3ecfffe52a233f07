#include "lrdcp/fgn.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "lrdcp/detail/fft.hpp"
#include "lrdcp/errors.hpp"

namespace lrdcp {

double fgn_acvf(std::int64_t k, double hurst) {
  if (!(hurst > 0.0 && hurst < 1.0))
    throw domain_error("fgn_acvf: hurst must lie in (0,1)");
  const double a = static_cast<double>(k < 0 ? -k : k);
  if (a == 0.0) return 1.0;
  const double twoH = 2.0 * hurst;
  return 0.5 * (std::pow(a + 1.0, twoH) - 2.0 * std::pow(a, twoH) +
                std::pow(a - 1.0, twoH));
}

acvf_fn fgn_acvf_fn(double hurst) {
  if (!(hurst > 0.0 && hurst < 1.0))
    throw domain_error("fgn_acvf_fn: hurst must lie in (0,1)");
  return [hurst](std::int64_t k) { return fgn_acvf(k, hurst); };
}

struct fgn_sampler::impl {
  std::size_t m = 0;                      // embedding size 2n-2
  std::vector<double> amp;                // sqrt(lambda_k / m) etc., see below
  std::vector<std::complex<double>> w, z; // work buffers
  std::unique_ptr<detail::fft> plan;
};

fgn_sampler::fgn_sampler(std::size_t n, double hurst)
    : n_(n), hurst_(hurst), impl_(new impl) {
  if (n < 1) throw domain_error("fgn_sampler: n must be >= 1");
  if (!(hurst > 0.0 && hurst < 1.0))
    throw domain_error("fgn_sampler: hurst must lie in (0,1)");
  if (n == 1) return;  // single draw, no embedding needed

  const std::size_t m = 2 * n - 2;
  impl_->m = m;
  impl_->plan.reset(new detail::fft(m));

  // First row of the circulant: gamma(0..n-1), then gamma(n-2..1).
  std::vector<std::complex<double>> c(m), lam(m);
  for (std::size_t j = 0; j < n; ++j) c[j] = fgn_acvf(j, hurst);
  for (std::size_t j = n; j < m; ++j) c[j] = fgn_acvf(m - j, hurst);
  impl_->plan->forward(c, lam);

  double lam_max = 0.0, lam_min = 0.0;
  for (const auto& v : lam) {
    lam_max = std::max(lam_max, v.real());
    lam_min = std::min(lam_min, v.real());
  }
  if (lam_min < -1e-8 * lam_max)
    throw numerical_error(
        "fgn_sampler: circulant embedding has eigenvalue " +
        std::to_string(lam_min) + " (max " + std::to_string(lam_max) +
        "); covariance not embeddable at n=" + std::to_string(n) +
        ", hurst=" + std::to_string(hurst));

  // amp[0] and amp[m/2] scale single real Gaussians, interior ones scale
  // complex pairs (variance split between real and imaginary part).
  impl_->amp.resize(m / 2 + 1);
  const double dm = static_cast<double>(m);
  for (std::size_t k = 0; k <= m / 2; ++k) {
    const double lk = std::max(lam[k].real(), 0.0);
    impl_->amp[k] = (k == 0 || k == m / 2) ? std::sqrt(lk / dm)
                                           : std::sqrt(lk / (2.0 * dm));
  }
  impl_->w.resize(m);
  impl_->z.resize(m);
}

fgn_sampler::~fgn_sampler() = default;

std::vector<double> fgn_sampler::sample(rng& gen) {
  if (n_ == 1) return {gen.next_gaussian()};

  const std::size_t m = impl_->m;
  auto& w = impl_->w;
  w[0] = impl_->amp[0] * gen.next_gaussian();
  w[m / 2] = impl_->amp[m / 2] * gen.next_gaussian();
  for (std::size_t k = 1; k < m / 2; ++k) {
    const double u = gen.next_gaussian();
    const double v = gen.next_gaussian();
    w[k] = impl_->amp[k] * std::complex<double>(u, v);
    w[m - k] = std::conj(w[k]);
  }
  impl_->plan->forward(w, impl_->z);
  std::vector<double> x(n_);
  for (std::size_t j = 0; j < n_; ++j) x[j] = impl_->z[j].real();
  return x;
}

std::vector<double> simulate_fgn(std::size_t n, double hurst,
                                 std::uint64_t seed) {
  fgn_sampler sampler(n, hurst);
  rng gen(seed);
  return sampler.sample(gen);
}

}  // namespace lrdcp
