#pragma once

#include <functional>
#include <utility>

#include "hardwall/radial_potential.hpp"

namespace hardwall {

// Constrained equilibrium data for a hard wall at rho_* inside the free
// droplet: the balayage measure is Delta Q restricted to the ring
// [rho_0, rho_*] plus a singular component of mass 1 - tau_* on the wall.
struct EquilibriumData {
  double rho0 = 0.0;
  double rho1 = 0.0;
  double tau_star = 0.0;       // rho_* q'(rho_*) / 2
  double singular_mass = 0.0;  // 1 - tau_star
  double gamma_N = 0.0;        // rho_* / (N (1 - tau_star))
  std::function<double(double)> density;  // Delta Q on [rho_0, rho_*], else 0
};

// (rho_0, rho_1): rho_1 solves r q'(r) = 2, rho_0 is where q' first turns
// positive. Throws std::runtime_error if r q'(r) never reaches 2.
std::pair<double, double> droplet_radii(const RadialPotential& p);

// Smallest root of r q'(r) = 2 tau, for tau in (0, 1].
double rho_tau(const RadialPotential& p, double tau);

// Throws std::domain_error unless rho_0 < rho_* < rho_1.
EquilibriumData equilibrium_measure(const HardWallEnsemble& e);

// Mass of the absolutely continuous part, int_ring Delta Q dA with
// dA = dx dy / pi; equals tau_* identically.
double ring_mass(const RadialPotential& p, double rho0, double rho_star);

}  // namespace hardwall
