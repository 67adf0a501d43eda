#include "hardwall/equilibrium.hpp"

#include <cmath>
#include <stdexcept>

#include "hardwall/quadrature.hpp"

namespace hardwall {

namespace {

// Bisection for the smallest root of r q'(r) = 2 tau on (0, r_max].
double solve_rq_prime(const RadialPotential& p, double target, double r_max) {
  auto f = [&](double r) { return r * p.q_prime(r) - target; };
  // Scan outward for a bracket; r q'(r) is nondecreasing for admissible q.
  double lo = 1e-12, hi = 0.0;
  const int scan = 4096;
  for (int i = 1; i <= scan; ++i) {
    double r = r_max * i / scan;
    if (f(r) >= 0.0) {
      hi = r;
      lo = r_max * (i - 1) / scan;
      if (lo <= 0.0) lo = 1e-12;
      break;
    }
  }
  if (hi == 0.0)
    throw std::runtime_error(
        "droplet: r q'(r) never reaches the target (unbounded droplet)");
  for (int it = 0; it < 200 && hi - lo > 1e-13 * r_max; ++it) {
    double mid = 0.5 * (lo + hi);
    (f(mid) >= 0.0 ? hi : lo) = mid;
  }
  // One secant refinement on the final bracket.
  double flo = f(lo), fhi = f(hi);
  if (fhi != flo) {
    double sec = lo - flo * (hi - lo) / (fhi - flo);
    if (sec > lo && sec < hi) return sec;
  }
  return 0.5 * (lo + hi);
}

// Upper end of the scan domain; all built-ins have rho_1 well below this.
double domain_cap(const RadialPotential& p) {
  for (double r = 1.0; r <= 1024.0; r *= 2.0)
    if (r * p.q_prime(r) >= 2.0) return 2.0 * r;
  throw std::runtime_error(
      "droplet: r q'(r) never reaches 2 (unbounded droplet)");
}

}  // namespace

std::pair<double, double> droplet_radii(const RadialPotential& p) {
  double cap = domain_cap(p);
  double rho1 = solve_rq_prime(p, 2.0, cap);
  // rho_0: last radius (below rho_1) where q' is still <= 0.
  double rho0 = 0.0;
  const int scan = 4096;
  for (int i = scan - 1; i >= 1; --i) {
    double r = rho1 * i / scan;
    if (p.q_prime(r) <= 0.0) {
      // Bisect for the sign change in (r, rho_1).
      double lo = r, hi = rho1;
      for (int it = 0; it < 200 && hi - lo > 1e-13 * rho1; ++it) {
        double mid = 0.5 * (lo + hi);
        (p.q_prime(mid) > 0.0 ? hi : lo) = mid;
      }
      rho0 = 0.5 * (lo + hi);
      break;
    }
  }
  return {rho0, rho1};
}

double rho_tau(const RadialPotential& p, double tau) {
  if (!(tau > 0.0 && tau <= 1.0))
    throw std::domain_error("rho_tau: tau must lie in (0, 1]");
  double cap = domain_cap(p);
  return solve_rq_prime(p, 2.0 * tau, cap);
}

double ring_mass(const RadialPotential& p, double rho0, double rho_star) {
  // dA = dx dy / pi, so the radial element is 2 r dr.
  double lo = std::max(rho0, 1e-12);
  return gauss_fixed([&](double r) { return laplacian(p, r) * 2.0 * r; }, lo,
                     rho_star, 64);
}

EquilibriumData equilibrium_measure(const HardWallEnsemble& e) {
  validate(e);
  auto [rho0, rho1] = droplet_radii(e.potential);
  if (!(e.rho_star > rho0 && e.rho_star < rho1))
    throw std::domain_error(
        "equilibrium_measure: rho_star not in (rho_0, rho_1) — not in the "
        "hard-wall regime");
  if (!(laplacian(e.potential, e.rho_star) > 0.0))
    throw std::domain_error(
        "equilibrium_measure: potential degenerate at the wall "
        "(Delta Q(rho_star) must be positive)");
  EquilibriumData d;
  d.rho0 = rho0;
  d.rho1 = rho1;
  d.tau_star = e.rho_star * e.potential.q_prime(e.rho_star) / 2.0;
  d.singular_mass = 1.0 - d.tau_star;
  d.gamma_N = e.rho_star / (e.N * d.singular_mass);
  RadialPotential p = e.potential;
  double rs = e.rho_star;
  d.density = [p, rho0, rs](double r) {
    if (r < rho0 || r > rs || r <= 0.0) return 0.0;
    return laplacian(p, r);
  };
  return d;
}

}  // namespace hardwall
