#include "hardwall/finite_kernel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hardwall {

KernelContext make_kernel_context(const HardWallEnsemble& e) {
  KernelContext ctx;
  ctx.ensemble = e;
  ctx.norms = compute_norms(e);
  ctx.equilibrium = equilibrium_measure(e);
  return ctx;
}

namespace {

// log of the weight e^(-N Q_N / 2) at |zeta| = r, i.e.
// -N q(r)/2 + (alpha/2) log(rho_* - r) + h(r)/2.
double log_weight(const HardWallEnsemble& e, double r) {
  double v = -0.5 * e.N * e.potential.q(r) +
             0.5 * e.alpha * std::log(e.rho_star - r);
  if (e.h) v += 0.5 * e.h(r);
  return v;
}

}  // namespace

std::complex<double> kernel_block(const KernelContext& ctx,
                                  std::complex<double> zeta,
                                  std::complex<double> eta, int j_lo,
                                  int j_hi) {
  const HardWallEnsemble& e = ctx.ensemble;
  const double rz = std::abs(zeta), rw = std::abs(eta);
  if (rz >= e.rho_star || rw >= e.rho_star) return {0.0, 0.0};
  j_lo = std::max(j_lo, 0);
  j_hi = std::min(j_hi, e.N);
  if (j_lo >= j_hi) return {0.0, 0.0};

  const double lw = log_weight(e, rz) + log_weight(e, rw);
  const double lr = (rz > 0.0 && rw > 0.0)
                        ? std::log(rz) + std::log(rw)
                        : -std::numeric_limits<double>::infinity();
  const double dtheta = std::arg(zeta) - std::arg(eta);

  std::vector<double> t(j_hi - j_lo);
  double shift = -std::numeric_limits<double>::infinity();
  for (int j = j_lo; j < j_hi; ++j) {
    double tj = (j == 0 ? 0.0 : j * lr) - ctx.norms.log_norms[j] + lw;
    t[j - j_lo] = tj;
    shift = std::max(shift, tj);
  }
  if (!std::isfinite(shift)) return {0.0, 0.0};
  std::complex<double> sum{0.0, 0.0};
  for (int j = j_lo; j < j_hi; ++j) {
    double m = std::exp(t[j - j_lo] - shift);
    sum += m * std::polar(1.0, j * dtheta);
  }
  return sum * std::exp(shift);
}

std::complex<double> kernel_eval(const KernelContext& ctx,
                                 std::complex<double> zeta,
                                 std::complex<double> eta) {
  return kernel_block(ctx, zeta, eta, 0, ctx.ensemble.N);
}

std::complex<double> rescaled_kernel(const KernelContext& ctx,
                                     std::complex<double> z,
                                     std::complex<double> w) {
  const double g = ctx.equilibrium.gamma_N;
  const double rs = ctx.ensemble.rho_star;
  return g * g * kernel_eval(ctx, rs - g * z, rs - g * w);
}

std::complex<double> kernel_high_part(const KernelContext& ctx,
                                      std::complex<double> z,
                                      std::complex<double> w, double M) {
  const HardWallEnsemble& e = ctx.ensemble;
  const int m_N = static_cast<int>(
      std::ceil(e.N * ctx.equilibrium.tau_star + M * std::sqrt(e.N)));
  if (m_N >= e.N)
    throw std::runtime_error("kernel_high_part: high-degree window is empty");
  const double g = ctx.equilibrium.gamma_N;
  const double rs = e.rho_star;
  return g * g * kernel_block(ctx, rs - g * z, rs - g * w, m_N, e.N);
}

CorrelationMatrix correlations(
    const KernelContext& ctx,
    const std::vector<std::complex<double>>& points) {
  const int k = static_cast<int>(points.size());
  CorrelationMatrix out;
  out.points = points;
  out.entries = Eigen::MatrixXcd(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i < j && points[i] == points[j]) out.degenerate = true;
      if (j < i) {
        out.entries(i, j) = std::conj(out.entries(j, i));
      } else {
        out.entries(i, j) = rescaled_kernel(ctx, points[i], points[j]);
      }
    }
  out.det = out.entries.determinant().real();
  return out;
}

}  // namespace hardwall
