#include <doctest.h>

#include <cmath>
#include <vector>

#include "lrdcp/errors.hpp"
#include "lrdcp/fgn.hpp"
#include "lrdcp/rng.hpp"

using namespace lrdcp;

TEST_CASE("fgn autocovariance") {
  for (double H : {0.55, 0.7, 0.9}) CHECK(fgn_acvf(0, H) == 1.0);
  CHECK(fgn_acvf(1, 0.7) == doctest::Approx(0.3195079107728942).epsilon(1e-14));
  for (int k = 1; k <= 6; ++k)
    CHECK(fgn_acvf(k, 0.5) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(fgn_acvf(-3, 0.8) == fgn_acvf(3, 0.8));
  // positive dependence decays monotonically for H > 1/2
  double prev = fgn_acvf(1, 0.75);
  for (int k = 2; k <= 40; ++k) {
    const double cur = fgn_acvf(k, 0.75);
    CHECK(cur > 0.0);
    CHECK(cur < prev);
    prev = cur;
  }
  CHECK_THROWS_AS((void)fgn_acvf(1, 0.0), domain_error);
  CHECK_THROWS_AS((void)fgn_acvf(1, 1.0), domain_error);
  CHECK_THROWS_AS((void)simulate_fgn(16, 1.2, 1), domain_error);
}

TEST_CASE("simulation is deterministic in the seed") {
  const std::vector<double> a = simulate_fgn(256, 0.7, 42);
  const std::vector<double> b = simulate_fgn(256, 0.7, 42);
  const std::vector<double> c = simulate_fgn(256, 0.7, 43);
  CHECK(a == b);
  CHECK(a != c);
  CHECK(a.size() == 256);

  fgn_sampler s1(64, 0.8), s2(64, 0.8);
  rng g1 = rng::stream(9, 4), g2 = rng::stream(9, 4);
  CHECK(s1.sample(g1) == s2.sample(g2));
}

TEST_CASE("tiny lengths") {
  CHECK(simulate_fgn(1, 0.7, 5).size() == 1);
  CHECK(simulate_fgn(2, 0.9, 5).size() == 2);
  CHECK_THROWS_AS((void)simulate_fgn(0, 0.7, 5), domain_error);
}

TEST_CASE("sample covariances match the target") {
  const std::size_t n = 8;
  const int reps = 20000;
  const double H = 0.7;
  fgn_sampler sampler(n, H);
  rng gen(314159);
  std::vector<double> cov(3, 0.0);
  double mean = 0.0;
  for (int r = 0; r < reps; ++r) {
    const std::vector<double> x = sampler.sample(gen);
    for (std::size_t lag = 0; lag < cov.size(); ++lag)
      for (std::size_t t = 0; t + lag < n; ++t) cov[lag] += x[t] * x[t + lag];
    for (double v : x) mean += v;
  }
  mean /= reps * n;
  CHECK(mean == doctest::Approx(0.0).epsilon(0.02));
  for (std::size_t lag = 0; lag < cov.size(); ++lag) {
    cov[lag] /= reps * (n - lag);
    CHECK(std::fabs(cov[lag] - fgn_acvf(static_cast<std::int64_t>(lag), H)) <=
          0.03);
  }
}

TEST_CASE("long-sample variance is near one") {
  const std::size_t n = 128;
  fgn_sampler sampler(n, 0.8);
  rng gen(2718);
  double sumsq = 0.0;
  const int reps = 4000;
  for (int r = 0; r < reps; ++r)
    for (double v : sampler.sample(gen)) sumsq += v * v;
  CHECK(sumsq / (reps * n) == doctest::Approx(1.0).epsilon(0.05));
}
