#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "hardwall/equilibrium.hpp"
#include "hardwall/orthonorms.hpp"

namespace hardwall {

// Everything needed to evaluate the finite-N kernel: model, norms, and the
// rescaling data. Build once, share freely (immutable).
struct KernelContext {
  HardWallEnsemble ensemble;
  NormTable norms;
  EquilibriumData equilibrium;
};

KernelContext make_kernel_context(const HardWallEnsemble& e);

// The weighted kernel
//   K_N(zeta, eta) = sum_j (zeta conj(eta))^j / ||zeta^j||^2
//                    * e^(-N (Q_N(zeta) + Q_N(eta)) / 2).
// Phases are carried exactly as e^(i j (arg zeta - arg eta)); moduli go
// through the log domain with a global shift. Returns 0 outside the disk.
std::complex<double> kernel_eval(const KernelContext& ctx,
                                 std::complex<double> zeta,
                                 std::complex<double> eta);

// Partial sum of kernel_eval over degrees j in [j_lo, j_hi).
std::complex<double> kernel_block(const KernelContext& ctx,
                                  std::complex<double> zeta,
                                  std::complex<double> eta, int j_lo,
                                  int j_hi);

// Hard-wall rescaling: gamma_N^2 K_N(rho_* - gamma_N z, rho_* - gamma_N w).
std::complex<double> rescaled_kernel(const KernelContext& ctx,
                                     std::complex<double> z,
                                     std::complex<double> w);

// High-degree part only: degrees j >= ceil(N tau_* + M sqrt(N)), in the
// rescaled coordinates. Throws if the window is empty.
std::complex<double> kernel_high_part(const KernelContext& ctx,
                                      std::complex<double> z,
                                      std::complex<double> w, double M);

struct CorrelationMatrix {
  std::vector<std::complex<double>> points;
  Eigen::MatrixXcd entries;
  double det = 0.0;
  bool degenerate = false;  // duplicate points were supplied
};

// k-point correlation determinant det(K_N(z_i, z_j)) in rescaled
// coordinates.
CorrelationMatrix correlations(const KernelContext& ctx,
                               const std::vector<std::complex<double>>& points);

}  // namespace hardwall
