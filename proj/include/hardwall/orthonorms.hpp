#pragma once

#include <vector>

#include "hardwall/equilibrium.hpp"
#include "hardwall/radial_potential.hpp"

namespace hardwall {

// log squared norms of the weighted monomials, log || zeta^j ||^2, for
// j = 0..N-1, plus the log-domain shifts N V_tau(r_peak) used per degree.
struct NormTable {
  HardWallEnsemble ensemble;
  std::vector<double> log_norms;
  std::vector<double> shift_logs;
};

// Full quadrature of
//   || zeta^j ||^2 = int_0^rho_* 2 r^(2j+1) (rho_* - r)^alpha e^(h(r))
//                    e^(-N q(r)) dr
// for every degree, parallelized over j.
NormTable compute_norms(const HardWallEnsemble& e);

// High-degree prediction (log form), valid for tau = j/N >= tau_* + M/sqrt(N):
//   || zeta^j ||^2 ~ e^(-N V_tau(rho_*)) 2 rho_* Gamma(alpha+1)
//                    (rho_* / (2N(tau - tau_*)))^(alpha+1).
double norm_asymptotic_high(const HardWallEnsemble& e, int j, double M = 4.0);

// Near-critical prediction (log form), valid for
// N(tau_* - delta_N) <= j <= N tau_* + M sqrt(N), delta_N = log(N)/sqrt(N):
//   || zeta^j ||^2 ~ C N^(-(alpha+1)/2) e^(-N V_tau(rho_tau)) phi_alpha(xi),
//   C = 2 rho_* (4 DeltaQ(rho_*))^(-(alpha+1)/2),
//   xi = sqrt(N) (tau_* - tau) / (rho_* sqrt(DeltaQ(rho_*))).
double norm_asymptotic_crit(const HardWallEnsemble& e, int j, double M = 4.0);

}  // namespace hardwall
