#pragma once

#include "hardwall/cdf_table.hpp"
#include "hardwall/finite_kernel.hpp"

namespace hardwall {

// Per-degree mass outside radius r:
//   (1 / ||zeta^j||^2) int_r^rho_* 2 s^(2j+1) (rho_*-s)^alpha e^h e^(-Nq) ds.
double tail_mass(const KernelContext& ctx, int j, double r);

// Gap probability P(|zeta|_N <= r) = prod_j (1 - tail_mass(j, r)),
// accumulated as sum log1p(-tail). If some tail saturates to 1 the result is
// 0 and *saturated (when given) is set.
double max_modulus_cdf(const KernelContext& ctx, double r,
                       bool* saturated = nullptr);

// I_N(x) = sum_j tail_mass(j, rho_* - a_N x); converges to x^(alpha+1).
double i_n(const KernelContext& ctx, double x);

// Fluctuation scale of the maximal modulus,
//   a_N = (1/2) gamma_N^((alpha+2)/(alpha+1)) (rho_*/Gamma(alpha+3))^(-1/(alpha+1)).
double a_n_const(const HardWallEnsemble& e);

// Limit law 1 - e^(-x^(alpha+1)) of the rescaled fluctuation
// omega_N = (rho_* - |zeta|_N) / a_N.
double weibull_cdf(double alpha, double x);

struct MaxModulusLaw {
  double a_N = 0.0;
  CdfTable cdf;  // x -> P(omega_N <= x)
};

// Exact law of omega_N tabulated on a geometric x-grid.
MaxModulusLaw max_modulus_law(const KernelContext& ctx, int grid_points = 200,
                              double x_min = 1e-3, double x_max = 5.0);

}  // namespace hardwall
