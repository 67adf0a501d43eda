#include "hardwall/orthonorms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hardwall/parallel.hpp"
#include "hardwall/quadrature.hpp"
#include "hardwall/special_functions.hpp"

namespace hardwall {

NormTable compute_norms(const HardWallEnsemble& e) {
  validate(e);
  auto [rho0, rho1] = droplet_radii(e.potential);
  if (!(e.rho_star > rho0 && e.rho_star < rho1))
    throw std::domain_error("compute_norms: rho_star not in (rho_0, rho_1)");

  NormTable table;
  table.ensemble = e;
  table.log_norms.assign(e.N, 0.0);
  table.shift_logs.assign(e.N, 0.0);

  const RadialPotential& p = e.potential;
  const double N = e.N, rs = e.rho_star;
  parallel_for(static_cast<std::size_t>(e.N), [&](std::size_t j) {
    const double dj = static_cast<double>(j);
    auto log_g = [&](double r) {
      double v = std::log(2.0) + (2.0 * dj + 1.0) * std::log(r) - N * p.q(r);
      if (e.h) v += e.h(r);
      return v;
    };
    try {
      table.log_norms[j] =
          integrate_log_singular(log_g, 0.0, rs, e.alpha, 1e-10).log_value;
    } catch (const std::exception& ex) {
      throw std::runtime_error("compute_norms: degree " + std::to_string(j) +
                               ": " + ex.what());
    }
    double tau = dj / N;
    double r_peak = tau > 0.0 ? std::min(rho_tau(p, std::min(tau, 1.0)), rs)
                              : std::max(rho0, 1e-8);
    table.shift_logs[j] = N * v_tau(p, tau, r_peak);
  });
  return table;
}

double norm_asymptotic_high(const HardWallEnsemble& e, int j, double M) {
  validate(e);
  const double N = e.N;
  const double tau = j / N;
  const double tau_star =
      e.rho_star * e.potential.q_prime(e.rho_star) / 2.0;
  if (!(tau >= tau_star + M / std::sqrt(N)))
    throw std::domain_error(
        "norm_asymptotic_high: degree below the high-degree window");
  return -N * v_tau(e.potential, tau, e.rho_star) +
         std::log(2.0 * e.rho_star) + std::lgamma(e.alpha + 1.0) +
         (e.alpha + 1.0) * std::log(e.rho_star / (2.0 * N * (tau - tau_star)));
}

double norm_asymptotic_crit(const HardWallEnsemble& e, int j, double M) {
  validate(e);
  const double N = e.N;
  const double tau = j / N;
  const double tau_star =
      e.rho_star * e.potential.q_prime(e.rho_star) / 2.0;
  const double delta_N = std::log(N) / std::sqrt(N);
  if (!(tau >= tau_star - delta_N && tau <= tau_star + M / std::sqrt(N)))
    throw std::domain_error(
        "norm_asymptotic_crit: degree outside the critical window");
  const double dq = laplacian(e.potential, e.rho_star);
  const double log_c = std::log(2.0 * e.rho_star) -
                       0.5 * (e.alpha + 1.0) * std::log(4.0 * dq);
  const double xi =
      std::sqrt(N) * (tau_star - tau) / (e.rho_star * std::sqrt(dq));
  const double rt = rho_tau(e.potential, std::max(tau, 1e-12));
  return log_c - 0.5 * (e.alpha + 1.0) * std::log(N) -
         N * v_tau(e.potential, tau, rt) + std::log(phi_alpha(e.alpha, xi));
}

}  // namespace hardwall
