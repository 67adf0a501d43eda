#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "hardwall/extremes.hpp"
#include "hardwall/special_functions.hpp"

using namespace hardwall;

namespace {

KernelContext ginibre_ctx(int N, double alpha = 0.0) {
  HardWallEnsemble e;
  e.potential = ginibre_potential();
  e.rho_star = 0.8;
  e.alpha = alpha;
  e.N = N;
  return make_kernel_context(e);
}

}  // namespace

TEST_CASE("per-degree tail masses: endpoints and closed form") {
  KernelContext ctx = ginibre_ctx(16);
  CHECK(tail_mass(ctx, 3, 0.8) == 0.0);
  CHECK(tail_mass(ctx, 3, 1e-9) == doctest::Approx(1.0).epsilon(1e-10));
  double expected =
      (lower_inc_gamma(4.0, 16.0 * 0.64) - lower_inc_gamma(4.0, 16.0 * 0.49)) /
      lower_inc_gamma(4.0, 16.0 * 0.64);
  CHECK(tail_mass(ctx, 3, 0.7) == doctest::Approx(expected).epsilon(1e-9));
  CHECK_THROWS_AS(tail_mass(ctx, 3, 0.9), std::domain_error);
  CHECK_THROWS_AS(tail_mass(ctx, 16, 0.5), std::domain_error);
}

TEST_CASE("gap probability: endpoints and monotonicity") {
  KernelContext ctx = ginibre_ctx(16);
  CHECK(max_modulus_cdf(ctx, 0.8) == doctest::Approx(1.0).epsilon(1e-12));
  double prev = -1.0;
  for (int k = 1; k <= 200; ++k) {
    double r = 0.8 * k / 200.0;
    double p = max_modulus_cdf(ctx, r);
    CHECK(p >= prev);
    prev = p;
  }
  bool saturated = false;
  CHECK(max_modulus_cdf(ctx, 1e-9, &saturated) <= 1e-100);
}

TEST_CASE("I_N: endpoints, monotonicity, product consistency") {
  KernelContext ctx = ginibre_ctx(64);
  CHECK(i_n(ctx, 0.0) == 0.0);
  double prev = 0.0;
  for (double x : {0.3, 0.7, 1.2, 2.0}) {
    double v = i_n(ctx, x);
    CHECK(v > prev);
    prev = v;
  }
  // -log P(|zeta|_N <= rho_* - a_N x) agrees with I_N(x) to second order
  double a_N = a_n_const(ctx.ensemble);
  for (double x : {0.5, 1.0, 2.0}) {
    double r = 0.8 - a_N * x;
    double in = i_n(ctx, x);
    double max_tail = 0.0;
    for (int j = 0; j < 64; ++j)
      max_tail = std::max(max_tail, tail_mass(ctx, j, r));
    double neg_log_p = -std::log(max_modulus_cdf(ctx, r));
    CHECK(std::abs(neg_log_p - in) <= in * in * max_tail + 1e-12);
  }
  CHECK_THROWS_AS(i_n(ctx, 1e9), std::domain_error);
}

TEST_CASE("fluctuation constant a_N") {
  HardWallEnsemble e;
  e.potential = ginibre_potential();
  e.rho_star = 0.8;
  e.N = 100;
  double g = 0.8 / 36.0;
  CHECK(a_n_const(e) == doctest::Approx(g * g / 0.8).epsilon(1e-12));

  // decay rate N^(-(alpha+2)/(alpha+1)) across an N-ladder
  e.alpha = 1.0;
  double a100 = a_n_const(e);
  e.N = 200;
  double a200 = a_n_const(e);
  CHECK(a100 / a200 == doctest::Approx(std::pow(2.0, 1.5)).epsilon(1e-10));
}

TEST_CASE("Weibull limit CDF") {
  CHECK(weibull_cdf(0.0, 1.0) ==
        doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
  CHECK(weibull_cdf(0.0, 0.0) == 0.0);
  CHECK(weibull_cdf(1.0, 2.0) ==
        doctest::Approx(1.0 - std::exp(-4.0)).epsilon(1e-14));
  CHECK_THROWS_AS(weibull_cdf(0.0, -1.0), std::domain_error);
}

TEST_CASE("tabulated law of the rescaled maximum") {
  KernelContext ctx = ginibre_ctx(48);
  MaxModulusLaw law = max_modulus_law(ctx, 60);
  CHECK(law.a_N == doctest::Approx(a_n_const(ctx.ensemble)).epsilon(1e-14));
  law.cdf.validate();
  CHECK(law.cdf.values.front() == 0.0);
  CHECK(law.cdf.values.back() > 0.99);
  CHECK(law.cdf.value_at(0.0) == 0.0);
}
