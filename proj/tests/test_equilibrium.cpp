#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "hardwall/equilibrium.hpp"

using namespace hardwall;

TEST_CASE("droplet radii for analytic potentials") {
  auto [g0, g1] = droplet_radii(ginibre_potential());
  CHECK(g0 == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(g1 == doctest::Approx(1.0).epsilon(1e-10));

  RadialPotential quartic;  // q = r^4, so r q' = 4 r^4 = 2 at 2^(-1/4)
  quartic.q = [](double r) { return std::pow(r, 4); };
  quartic.q_prime = [](double r) { return 4.0 * std::pow(r, 3); };
  quartic.q_second = [](double r) { return 12.0 * r * r; };
  auto [q0, q1] = droplet_radii(quartic);
  CHECK(q0 == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(q1 == doctest::Approx(std::pow(2.0, -0.25)).epsilon(1e-10));
}

TEST_CASE("unbounded droplet is rejected") {
  RadialPotential bad;  // r q'(r) = -2 r^2 never reaches 2
  bad.q = [](double r) { return -r * r; };
  bad.q_prime = [](double r) { return -2.0 * r; };
  bad.q_second = [](double) { return -2.0; };
  CHECK_THROWS_AS(droplet_radii(bad), std::runtime_error);
}

TEST_CASE("rho_tau: values, monotonicity, endpoint") {
  RadialPotential p = ginibre_potential();
  CHECK(rho_tau(p, 0.64) == doctest::Approx(0.8).epsilon(1e-10));
  CHECK(rho_tau(p, 1.0) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK_THROWS_AS(rho_tau(p, 0.0), std::domain_error);
  CHECK_THROWS_AS(rho_tau(p, 1.5), std::domain_error);
  double prev = 0.0;
  for (int k = 1; k <= 100; ++k) {
    double v = rho_tau(p, k / 100.0);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("rho_tau linearization near tau_star") {
  // rho_* - rho_tau ~ (tau_* - tau) / (2 rho_* DeltaQ(rho_*))
  RadialPotential p = ginibre_potential();
  const double rs = 0.8, tau_star = 0.64;
  const double denom = 2.0 * rs * laplacian(p, rs);
  for (double d : {1e-2, 1e-3, 1e-4}) {
    double lhs = rs - rho_tau(p, tau_star - d);
    double rhs = d / denom;
    CHECK(lhs / rhs == doctest::Approx(1.0).epsilon(50.0 * d));
  }
}

TEST_CASE("constrained equilibrium data for the Ginibre wall") {
  HardWallEnsemble e;
  e.potential = ginibre_potential();
  e.rho_star = 0.8;
  e.N = 100;
  EquilibriumData d = equilibrium_measure(e);
  CHECK(d.tau_star == doctest::Approx(0.64).epsilon(1e-14));
  CHECK(d.singular_mass == doctest::Approx(0.36).epsilon(1e-14));
  CHECK(d.gamma_N == doctest::Approx(0.8 / 36.0).epsilon(1e-14));
  CHECK(d.gamma_N * e.N * d.singular_mass == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(d.density(0.5) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(d.density(0.81) == 0.0);

  double total = ring_mass(e.potential, d.rho0, e.rho_star) + d.singular_mass;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(ring_mass(e.potential, d.rho0, e.rho_star) ==
        doctest::Approx(d.tau_star).epsilon(1e-9));
}

TEST_CASE("pulled and degenerate phases are rejected") {
  HardWallEnsemble e;
  e.potential = ginibre_potential();
  e.N = 50;
  e.rho_star = 1.5;  // beyond rho_1
  CHECK_THROWS_AS(equilibrium_measure(e), std::domain_error);
}
