#include <doctest.h>

#include <cmath>
#include <vector>

#include "lrdcp/errors.hpp"
#include "lrdcp/hermite.hpp"
#include "lrdcp/marginals.hpp"
#include "lrdcp/normal.hpp"

using namespace lrdcp;

TEST_CASE("marginal parsing") {
  CHECK(parse_marginal("normal").kind == marginal_kind::normal);
  CHECK(parse_marginal("pareto").kind == marginal_kind::pareto);
  CHECK(parse_marginal("cauchy").kind == marginal_kind::cauchy);
  CHECK(parse_marginal("chisq").kind == marginal_kind::chisq);
  CHECK_THROWS_AS((void)parse_marginal("weibull"), domain_error);
}

TEST_CASE("hermite ranks") {
  CHECK(parse_marginal("normal").hermite_rank() == 1);
  CHECK(parse_marginal("pareto").hermite_rank() == 1);
  CHECK(parse_marginal("cauchy").hermite_rank() == 1);
  CHECK(parse_marginal("chisq").hermite_rank() == 2);
}

TEST_CASE("normal marginal is the identity") {
  const auto spec = parse_marginal("normal");
  for (double x : {-2.0, 0.0, 1.3}) CHECK(spec.transform(x) == x);
}

TEST_CASE("pareto marginal") {
  const auto spec = parse_marginal("pareto");
  CHECK(spec.transform(0.0) ==
        doctest::Approx(-0.2772192929399154).epsilon(1e-9));
  // strictly decreasing along a grid
  double prev = spec.transform(-3.0);
  for (double x = -2.8; x <= 3.0; x += 0.2) {
    const double cur = spec.transform(x);
    CHECK(cur < prev);
    prev = cur;
  }
  marginal_spec bad = parse_marginal("pareto");
  bad.pareto_alpha = 2.0;
  CHECK_THROWS_AS((void)subordinate({0.0}, bad), domain_error);
  bad.pareto_alpha = 3.0;
  bad.pareto_k = 0.0;
  CHECK_THROWS_AS((void)subordinate({0.0}, bad), domain_error);
}

TEST_CASE("cauchy marginal") {
  const auto spec = parse_marginal("cauchy");
  CHECK(spec.transform(0.0) == doctest::Approx(0.0).epsilon(1e-12));
  // G(Phi^{-1}(3/4)) = tan(pi/4) = 1
  CHECK(spec.transform(normal_quantile(0.75)) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(spec.transform(1.0) > spec.transform(0.5));
}

TEST_CASE("chi-square marginal") {
  const auto spec = parse_marginal("chisq");
  CHECK(spec.transform(1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(spec.transform(-1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(spec.transform(0.0) == doctest::Approx(-0.5).epsilon(1e-15));
  // first Hermite coefficient vanishes, second matches -2 phi(1)
  CHECK(hermite_expectation_over(-1.0, 1.0, 1) ==
        doctest::Approx(0.0).epsilon(1e-8));
  CHECK(hermite_expectation_over(-1.0, 1.0, 2) ==
        doctest::Approx(-0.48394144903828673).epsilon(1e-8));
}

TEST_CASE("pareto rank-one coefficient ties to the closed form") {
  // b solves G(b) = 0, i.e. Phi(b) = 1.5^{-3} = 8/27; G decreasing turns the
  // indicator into {xi >= b}, so J_1(G;0) = phi(b)
  const auto spec = parse_marginal("pareto");
  const monotone_transform G{
      [spec](double t) { return spec.transform(t); }, false};
  const double j = hermite_coefficient(G, 1, 0.0);
  const double b = normal_quantile(8.0 / 27.0);
  CHECK(j == doctest::Approx(normal_pdf(b)).epsilon(1e-8));
}

TEST_CASE("subordination maps elementwise") {
  const std::vector<double> xi = {-1.0, 0.0, 2.0};
  const auto spec = parse_marginal("chisq");
  const std::vector<double> x = subordinate(xi, spec);
  REQUIRE(x.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(x[i] == spec.transform(xi[i]));
}

TEST_CASE("shift injection") {
  const std::vector<double> x = inject_shift(std::vector<double>(10, 0.0),
                                             {0.5, 2.0});
  for (std::size_t i = 0; i < 5; ++i) CHECK(x[i] == 0.0);
  for (std::size_t i = 5; i < 10; ++i) CHECK(x[i] == 2.0);

  const std::vector<double> all =
      inject_shift(std::vector<double>(4, 1.0), {0.0, -1.0});
  for (double v : all) CHECK(v == 0.0);

  const std::vector<double> none =
      inject_shift(std::vector<double>(4, 1.0), {1.0, 7.0});
  for (double v : none) CHECK(v == 1.0);

  CHECK_THROWS_AS((void)inject_shift({0.0}, {-0.1, 1.0}), domain_error);
  CHECK_THROWS_AS((void)inject_shift({0.0}, {1.1, 1.0}), domain_error);
}
