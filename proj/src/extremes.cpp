#include "hardwall/extremes.hpp"

#include <cmath>
#include <stdexcept>

#include "hardwall/parallel.hpp"
#include "hardwall/quadrature.hpp"

namespace hardwall {

double tail_mass(const KernelContext& ctx, int j, double r) {
  const HardWallEnsemble& e = ctx.ensemble;
  if (j < 0 || j >= e.N) throw std::domain_error("tail_mass: degree out of range");
  if (!(r > 0.0 && r <= e.rho_star))
    throw std::domain_error("tail_mass: r must lie in (0, rho_star]");
  if (r == e.rho_star) return 0.0;
  const double dj = j, N = e.N;
  auto log_g = [&](double s) {
    double v =
        std::log(2.0) + (2.0 * dj + 1.0) * std::log(s) - N * e.potential.q(s);
    if (e.h) v += e.h(s);
    return v;
  };
  double log_tail =
      integrate_log_singular(log_g, r, e.rho_star, e.alpha, 1e-10).log_value -
      ctx.norms.log_norms[j];
  double t = std::exp(log_tail);
  return t > 1.0 ? 1.0 : t;
}

double max_modulus_cdf(const KernelContext& ctx, double r, bool* saturated) {
  const int N = ctx.ensemble.N;
  if (saturated) *saturated = false;
  std::vector<double> tails(N);
  parallel_for(static_cast<std::size_t>(N),
               [&](std::size_t j) { tails[j] = tail_mass(ctx, j, r); });
  double log_p = 0.0;
  for (double t : tails) {
    if (t >= 1.0) {
      if (saturated) *saturated = true;
      return 0.0;
    }
    log_p += std::log1p(-t);
  }
  return std::exp(log_p);
}

double i_n(const KernelContext& ctx, double x) {
  if (!(x >= 0.0)) throw std::domain_error("i_n: x must be >= 0");
  const double a_N = a_n_const(ctx.ensemble);
  const double r = ctx.ensemble.rho_star - a_N * x;
  if (!(r > 0.0)) throw std::domain_error("i_n: a_N x >= rho_star");
  if (x == 0.0) return 0.0;
  const int N = ctx.ensemble.N;
  std::vector<double> tails(N);
  parallel_for(static_cast<std::size_t>(N),
               [&](std::size_t j) { tails[j] = tail_mass(ctx, j, r); });
  double sum = 0.0;
  for (double t : tails) sum += t;
  return sum;
}

double a_n_const(const HardWallEnsemble& e) {
  EquilibriumData eq = equilibrium_measure(e);
  const double a = e.alpha;
  return 0.5 * std::pow(eq.gamma_N, (a + 2.0) / (a + 1.0)) *
         std::pow(e.rho_star / std::tgamma(a + 3.0), -1.0 / (a + 1.0));
}

double weibull_cdf(double alpha, double x) {
  if (!(alpha > -1.0)) throw std::domain_error("weibull_cdf: alpha must be > -1");
  if (!(x >= 0.0)) throw std::domain_error("weibull_cdf: x must be >= 0");
  return -std::expm1(-std::pow(x, alpha + 1.0));
}

MaxModulusLaw max_modulus_law(const KernelContext& ctx, int grid_points,
                              double x_min, double x_max) {
  MaxModulusLaw law;
  law.a_N = a_n_const(ctx.ensemble);
  law.cdf.degree = -1;
  law.cdf.nodes.push_back(0.0);
  law.cdf.values.push_back(0.0);
  const double ratio = std::pow(x_max / x_min, 1.0 / (grid_points - 1));
  double prev = 0.0;
  for (int k = 0; k < grid_points; ++k) {
    double x = x_min * std::pow(ratio, k);
    double r = ctx.ensemble.rho_star - law.a_N * x;
    double p = r > 0.0 ? 1.0 - max_modulus_cdf(ctx, r) : 1.0;
    // Guard against quadrature jitter breaking monotonicity at the 1e-14
    // level.
    p = std::max(p, prev);
    prev = p;
    law.cdf.nodes.push_back(x);
    law.cdf.values.push_back(p);
  }
  law.cdf.validate();
  return law;
}

}  // namespace hardwall
