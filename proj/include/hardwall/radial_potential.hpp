#pragma once

#include <functional>
#include <string>
#include <vector>

namespace hardwall {

// Radially symmetric external potential Q(zeta) = q(|zeta|) with analytic
// (or finite-difference) derivatives.
struct RadialPotential {
  std::function<double(double)> q;
  std::function<double(double)> q_prime;
  std::function<double(double)> q_second;
  std::string label;
};

// q(r) = r^2.
RadialPotential ginibre_potential();

// q(r) = r^(2m) / m for integer m >= 1 (m = 1 recovers Ginibre).
RadialPotential monomial_potential(int m);

// Monotone-cubic interpolation of sampled (r, q(r)) values; derivatives by
// central finite differences with step 1e-5 * max(1, r).
RadialPotential tabulated_potential(const std::vector<double>& r,
                                    const std::vector<double>& q,
                                    const std::string& label = "tabulated");

// Delta Q(r) = (q''(r) + q'(r)/r) / 4.
double laplacian(const RadialPotential& p, double r);

// V_tau(r) = q(r) - 2 tau log r.
double v_tau(const RadialPotential& p, double tau, double r);
double v_tau_prime(const RadialPotential& p, double tau, double r);

// The hard-wall model: base potential, wall radius rho_* inside the free
// droplet, wall charge alpha > -1, bounded radial perturbation h with
// h(rho_*) = 0, and particle number N.
struct HardWallEnsemble {
  RadialPotential potential;
  double rho_star = 0.0;
  double alpha = 0.0;
  std::function<double(double)> h;  // nullptr means h == 0
  int N = 0;
};

// Q_N(r) = q(r) - (alpha/N) log(rho_* - r) - h(r)/N, for 0 < r < rho_*.
double q_n_eval(const HardWallEnsemble& e, double r);

// Validates alpha > -1, N >= 1, h(rho_*) = 0, and 0 < rho_* (the droplet
// check rho_0 < rho_* < rho_1 lives in the equilibrium module).
void validate(const HardWallEnsemble& e);

}  // namespace hardwall
