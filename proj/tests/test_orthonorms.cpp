#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "hardwall/orthonorms.hpp"
#include "hardwall/special_functions.hpp"

using namespace hardwall;

namespace {

HardWallEnsemble ginibre_wall(int N, double alpha = 0.0) {
  HardWallEnsemble e;
  e.potential = ginibre_potential();
  e.rho_star = 0.8;
  e.alpha = alpha;
  e.N = N;
  return e;
}

// log || zeta^j ||^2 = -(j+1) log N + log gamma(j+1, N rho_*^2) for the
// unperturbed Ginibre wall.
double closed_form(int N, int j) {
  return -(j + 1.0) * std::log(static_cast<double>(N)) +
         log_lower_inc_gamma(j + 1.0, N * 0.64);
}

}  // namespace

TEST_CASE("Ginibre norms match the incomplete-gamma closed form") {
  for (int N : {4, 16, 64}) {
    NormTable t = compute_norms(ginibre_wall(N));
    for (int j = 0; j < N; ++j)
      CHECK(t.log_norms[j] == doctest::Approx(closed_form(N, j)).epsilon(1e-9));
  }
}

TEST_CASE("degree-zero norm closed form") {
  NormTable t = compute_norms(ginibre_wall(25));
  double expected = (1.0 - std::exp(-25.0 * 0.64)) / 25.0;
  CHECK(std::exp(t.log_norms[0]) == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("norms stay finite and positive for fractional wall charge") {
  NormTable t = compute_norms(ginibre_wall(50, 0.5));
  for (double lv : t.log_norms) CHECK(std::isfinite(lv));
}

TEST_CASE("log-norm sequence is smooth in the degree") {
  NormTable t = compute_norms(ginibre_wall(128));
  // skip the first few degrees: the second difference of log Gamma(j+1)
  // is log((j+1)/j), which is only small once j grows
  for (int j = 4; j + 1 < 128; ++j) {
    double second_diff =
        t.log_norms[j + 1] - 2.0 * t.log_norms[j] + t.log_norms[j - 1];
    CHECK(std::abs(second_diff) < 0.5);
  }
}

TEST_CASE("high-degree prediction: window guard and alpha = 0 reduction") {
  HardWallEnsemble e = ginibre_wall(100);
  CHECK_THROWS_AS(norm_asymptotic_high(e, 64, 2.0), std::domain_error);

  int j = 90;  // tau = 0.9, above tau_* + 2/sqrt(N)
  double tau = 0.9;
  double expected = -e.N * v_tau(e.potential, tau, 0.8) +
                    std::log(2.0 * 0.8 * 0.8 / (2.0 * e.N * (tau - 0.64)));
  CHECK(norm_asymptotic_high(e, j, 2.0) ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("high-degree prediction decreases in the degree") {
  HardWallEnsemble e = ginibre_wall(400, 1.0);
  double prev = norm_asymptotic_high(e, 340, 4.0);
  for (int j = 345; j < 400; j += 5) {
    double v = norm_asymptotic_high(e, j, 4.0);
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("critical prediction: constants and window guard") {
  HardWallEnsemble e = ginibre_wall(100);
  CHECK_THROWS_AS(norm_asymptotic_crit(e, 5, 4.0), std::domain_error);

  // At tau = tau_* the xi term is phi_alpha(0) and rho_tau = rho_*;
  // Ginibre has DeltaQ = 1, so C = 2 rho_* 4^(-(alpha+1)/2).
  int j = 64;
  double expected = std::log(2.0 * 0.8 / 2.0) - 0.5 * std::log(100.0) -
                    100.0 * v_tau(e.potential, 0.64, 0.8) +
                    std::log(phi_alpha(0.0, 0.0));
  CHECK(norm_asymptotic_crit(e, j, 4.0) ==
        doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("high and critical windows agree where they overlap") {
  // Matching the two regimes needs tau - tau_* >= M/sqrt(N) (high window)
  // while staying well below N^(-1/3) (where the quadratic expansion of the
  // effective potential around rho_tau breaks down), so N must be large.
  HardWallEnsemble e = ginibre_wall(100000000);
  int j = 64100000;  // tau - tau_* = 1e-3, between 4/sqrt(N) and N^(-1/3)
  double high = norm_asymptotic_high(e, j, 4.0);
  double crit = norm_asymptotic_crit(e, j, 12.0);
  CHECK(std::abs(std::expm1(high - crit)) < 0.10);
}
