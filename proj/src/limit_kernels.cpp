#include "hardwall/limit_kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "hardwall/quadrature.hpp"
#include "hardwall/special_functions.hpp"

namespace hardwall {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_support(const LaplaceKernelSpec& spec) {
  double prev = 0.0;
  for (const auto& [lo, hi] : spec.support) {
    if (!(lo >= prev && hi > lo))
      throw std::domain_error(
          "LaplaceKernelSpec: support intervals must be disjoint, increasing, "
          "and nonnegative");
    prev = hi;
  }
}

// Sum of adaptive integrals of g over the support intervals.
double support_integral(const LaplaceKernelSpec& spec,
                        const std::function<double(double)>& g,
                        double rel_tol = 1e-12) {
  AdaptiveOptions opt;
  opt.rel_tol = rel_tol;
  double total = 0.0;
  for (const auto& [lo, hi] : spec.support)
    total += integrate_adaptive(g, lo, hi, opt).value;
  return total;
}

std::complex<double> support_integral_complex(
    const LaplaceKernelSpec& spec,
    const std::function<std::complex<double>(double)>& g,
    double rel_tol = 1e-12) {
  AdaptiveOptions opt;
  opt.rel_tol = rel_tol;
  std::complex<double> total{0.0, 0.0};
  for (const auto& [lo, hi] : spec.support)
    total += integrate_adaptive_complex(g, lo, hi, opt).value;
  return total;
}

}  // namespace

LaplaceKernelSpec canonical_spec(double alpha) {
  return canonical_spec_on(alpha, {{0.0, 1.0}});
}

LaplaceKernelSpec canonical_spec_on(
    double alpha, const std::vector<std::pair<double, double>>& support) {
  if (!(alpha > -1.0))
    throw std::domain_error("canonical_spec: alpha must be > -1");
  LaplaceKernelSpec spec;
  spec.alpha = alpha;
  double lg = std::lgamma(alpha + 1.0);
  spec.f = [alpha, lg](double t) {
    return t <= 0.0 ? 0.0 : std::exp((alpha + 1.0) * std::log(t) - lg);
  };
  spec.support = support;
  check_support(spec);
  return spec;
}

std::complex<double> k_f(const LaplaceKernelSpec& spec, std::complex<double> z,
                         std::complex<double> w) {
  if (!(z.real() > 0.0 && w.real() > 0.0))
    throw std::domain_error("k_f: Re z and Re w must be positive");
  std::complex<double> s = z + std::conj(w);
  std::complex<double> integral = support_integral_complex(
      spec, [&](double t) { return spec.f(t) * std::exp(-t * s); });
  double pre = std::pow(2.0 * z.real(), 0.5 * spec.alpha) *
               std::pow(2.0 * w.real(), 0.5 * spec.alpha);
  return pre * integral;
}

std::complex<double> k_alpha(double alpha, std::complex<double> z,
                             std::complex<double> w) {
  if (!(z.real() > 0.0 && w.real() > 0.0))
    throw std::domain_error("k_alpha: Re z and Re w must be positive");
  if (!(alpha > -1.0)) throw std::domain_error("k_alpha: alpha must be > -1");
  std::complex<double> s = z + std::conj(w);
  double lg = std::lgamma(alpha + 1.0);
  AdaptiveOptions opt;
  opt.rel_tol = 1e-13;  // t^(alpha+1) has a singular derivative at 0
  std::complex<double> integral =
      integrate_adaptive_complex(
          [&](double t) {
            return std::exp((alpha + 1.0) * std::log(t) - lg - t * s);
          },
          0.0, 1.0, opt)
          .value;
  double pre = std::pow(2.0 * z.real(), 0.5 * alpha) *
               std::pow(2.0 * w.real(), 0.5 * alpha);
  return pre * integral;
}

double r_diag(const LaplaceKernelSpec& spec, double x) {
  if (!(x > 0.0)) throw std::domain_error("r_diag: x must be positive");
  double integral = support_integral(
      spec, [&](double t) { return spec.f(t) * std::exp(-2.0 * x * t); });
  return std::pow(2.0 * x, spec.alpha) * integral;
}

double half_line_mass(double alpha, double X) {
  if (!(alpha > -1.0))
    throw std::domain_error("half_line_mass: alpha must be > -1");
  double lg = std::lgamma(alpha + 1.0);
  AdaptiveOptions phi_opt;
  phi_opt.rel_tol = 1e-13;
  // phi(x) = (2x)^(-alpha) K(x,x); smooth and bounded near 0. The t = y^2
  // substitution softens the t^(alpha+1) endpoint for alpha < 0.
  auto phi = [&](double x) {
    return integrate_adaptive(
               [&](double y) {
                 return 2.0 * std::exp((2.0 * alpha + 3.0) * std::log(y) - lg -
                                       2.0 * x * y * y);
               },
               0.0, 1.0, phi_opt)
        .value;
  };
  // Absorb the (2x)^alpha factor with m = x^(alpha+1)/(alpha+1).
  const double ap1 = alpha + 1.0;
  const double M = std::pow(X, ap1) / ap1;
  AdaptiveOptions opt;
  opt.rel_tol = 1e-12;
  opt.initial_segments = 32;
  double head = std::pow(2.0, alpha) *
                integrate_adaptive(
                    [&](double m) {
                      double x = std::pow(ap1 * m, 1.0 / ap1);
                      return phi(x);
                    },
                    0.0, M, opt)
                    .value;
  // Same substitution for the tail: Q(a, s) - 1 ~ -s^a near s = 0.
  double tail =
      0.5 * integrate_adaptive(
                [&](double y) {
                  return 2.0 * y * gamma_q(ap1, 2.0 * X * y * y);
                },
                0.0, 1.0, opt)
                .value;
  return head + tail;
}

std::complex<double> ginibre_kernel(std::complex<double> z,
                                    std::complex<double> w) {
  return std::exp(z * std::conj(w) - 0.5 * std::norm(z) - 0.5 * std::norm(w));
}

std::complex<double> plasma_F(std::complex<double> z) {
  if (z.imag() == 0.0) return 0.5 * erfc_eval(z.real() / std::sqrt(2.0));
  // F(z) = e^(-z^2/2) / sqrt(2 pi) * int_0^inf e^(-s^2/2 - z s) ds;
  // the integrand peaks at s = max(0, -Re z) and dies off Gaussian-fast.
  double peak = std::max(0.0, -z.real());
  double S = peak + 15.0;
  AdaptiveOptions opt;
  opt.rel_tol = 1e-13;
  opt.initial_segments = 32;
  if (peak > 0.0) opt.split_points = {peak};
  auto est = integrate_adaptive_complex(
      [&](double s) { return std::exp(-0.5 * s * s - z * s); }, 0.0, S, opt);
  return std::exp(-0.5 * z * z) * est.value / std::sqrt(2.0 * kPi);
}

std::complex<double> plasma_H(std::complex<double> z, double truncation) {
  if (z.real() > 0.0)
    throw std::domain_error("plasma_H: Re z must be <= 0");
  double lo = z.real() - truncation;
  AdaptiveOptions opt;
  opt.rel_tol = 1e-12;
  opt.initial_segments = 32;
  opt.split_points = {z.real()};
  auto est = integrate_adaptive_complex(
      [&](double t) {
        std::complex<double> d = z - t;
        return std::exp(-0.5 * d * d) / plasma_F({t, 0.0});
      },
      lo, 0.0, opt);
  return est.value / std::sqrt(2.0 * kPi);
}

std::complex<double> kernel_free(std::complex<double> z,
                                 std::complex<double> w) {
  return ginibre_kernel(z, w) * plasma_F(z + std::conj(w));
}

std::complex<double> kernel_hard(std::complex<double> z,
                                 std::complex<double> w) {
  if (z.real() > 0.0 || w.real() > 0.0)
    throw std::domain_error("kernel_hard: Re z and Re w must be <= 0");
  return ginibre_kernel(z, w) * plasma_H(z + std::conj(w));
}

double mass_one_residual_reduced(const LaplaceKernelSpec& spec, double x) {
  if (!(x > 0.0))
    throw std::domain_error("mass_one_residual: x must be positive");
  double ga = std::tgamma(spec.alpha + 1.0);
  double lhs =
      std::pow(2.0 * x, spec.alpha) *
      support_integral(spec, [&](double s) {
        double fs = spec.f(s);
        return std::exp(-2.0 * x * s) * fs * fs * ga *
               std::pow(s, -(spec.alpha + 1.0));
      });
  return lhs - r_diag(spec, x);
}

namespace {

// Inner Laplace transform g(v) = int f(t) e^(-t(x+u)) e^(-i t v) dt with the
// panel count matched to the oscillation so large |v| does not alias.
std::complex<double> oscillatory_transform(const LaplaceKernelSpec& spec,
                                           double decay, double v) {
  std::complex<double> total{0.0, 0.0};
  for (const auto& [lo, hi] : spec.support) {
    int panels = std::max(
        1, static_cast<int>(std::ceil((hi - lo) * std::abs(v) / (2.0 * kPi))));
    panels = std::min(panels, 4000);
    for (int p = 0; p < panels; ++p) {
      double a = lo + (hi - lo) * p / panels;
      double b = lo + (hi - lo) * (p + 1) / panels;
      total += gauss_fixed_complex(
          [&](double t) {
            return spec.f(t) *
                   std::exp(std::complex<double>(-t * decay, -t * v));
          },
          a, b, 16);
    }
  }
  return total;
}

}  // namespace

MassOneResidual mass_one_residual(const LaplaceKernelSpec& spec, double x,
                                  double v_cut) {
  MassOneResidual out;
  out.reduced = mass_one_residual_reduced(spec, x);

  // |K_f(x, u+iv)|^2 = (2x)^a (2u)^a |g(v)|^2 with g as above; integrate the
  // v-line numerically up to V0 and the Fourier-type 1/v^2 tail via the
  // endpoint asymptotics |g(v)|^2 ~ sum_e |f(e) e^(-e(x+u))|^2 / v^2.
  const double V0 = 80.0;
  const double U = 60.0;
  const double ap1 = spec.alpha + 1.0;
  auto u_profile = [&](double u) {
    double decay = x + u;
    AdaptiveOptions vopt;
    vopt.rel_tol = 1e-8;
    vopt.initial_segments = 40;
    vopt.max_segments = 600;
    double head =
        2.0 *
        integrate_adaptive(
            [&](double v) { return std::norm(oscillatory_transform(spec, decay, v)); },
            0.0, V0, vopt)
            .value;
    double edge_sq = 0.0;
    for (const auto& [lo, hi] : spec.support) {
      double flo = spec.f(lo) * std::exp(-lo * decay);
      double fhi = spec.f(hi) * std::exp(-hi * decay);
      edge_sq += flo * flo + fhi * fhi;
    }
    double tail = 2.0 * edge_sq * (1.0 / V0 - 1.0 / v_cut);
    return (head + tail) / kPi;
  };
  // Outer u-integral with the (2u)^a factor absorbed by
  // m = u^(alpha+1)/(alpha+1).
  const double M = std::pow(U, ap1) / ap1;
  AdaptiveOptions uopt;
  uopt.rel_tol = 1e-6;
  uopt.initial_segments = 24;
  uopt.max_segments = 300;
  auto est = integrate_adaptive(
      [&](double m) {
        double u = std::pow(ap1 * m, 1.0 / ap1);
        return u_profile(u);
      },
      0.0, M, uopt);
  double mass2d = std::pow(2.0 * x, spec.alpha) * std::pow(2.0, spec.alpha) *
                  est.value;
  out.direct2d = mass2d - r_diag(spec, x);
  out.truncation_flagged = !est.converged;
  return out;
}

double cauchy_transform(const LaplaceKernelSpec& spec, double x) {
  if (!(x > 0.0))
    throw std::domain_error("cauchy_transform: x must be positive");
  double R = r_diag(spec, x);
  if (R < 1e-300)
    throw std::runtime_error(
        "cauchy_transform: R(x) below 1e-300, evaluation refused");
  const double a = spec.alpha;
  const double ga = std::tgamma(a + 1.0);
  // A(x) = int f(s) s^(-(a+1)) Gamma(a+1, 2xs) ds over the support.
  double A = support_integral(spec, [&](double s) {
    return spec.f(s) * std::pow(s, -(a + 1.0)) * upper_inc_gamma(a + 1.0, 2.0 * x * s);
  });
  // G(t) = Gamma(a+1) int_{support, s<t} f(s) s^(-(a+1)) ds.
  auto big_g = [&](double t) {
    double acc = 0.0;
    AdaptiveOptions opt;
    opt.rel_tol = 1e-12;
    for (const auto& [lo, hi] : spec.support) {
      if (t <= lo) break;
      double top = std::min(t, hi);
      acc += integrate_adaptive(
                 [&](double s) {
                   return spec.f(s) * std::pow(s, -(a + 1.0));
                 },
                 lo, top, opt)
                 .value;
    }
    return ga * acc;
  };
  double L2 = std::pow(2.0 * x, a) *
              support_integral(
                  spec,
                  [&](double t) {
                    return spec.f(t) * std::exp(-2.0 * x * t) * big_g(t);
                  },
                  1e-10);
  return L2 / R - A;
}

std::complex<double> cauchy_transform_direct2d(const LaplaceKernelSpec& spec,
                                               std::complex<double> z,
                                               double r_max) {
  double R = r_diag(spec, z.real());
  // Polar coordinates about z: w = z + r e^(i theta), so the 1/(z-w) factor
  // becomes -e^(-i theta)/r and the Jacobian r cancels the singularity.
  auto theta_avg = [&](double r) {
    const int n = 96;
    std::complex<double> acc{0.0, 0.0};
    for (int k = 0; k < n; ++k) {
      double th = 2.0 * kPi * (k + 0.5) / n;
      std::complex<double> w = z + std::polar(r, th);
      if (w.real() <= 0.0) continue;
      double b = std::norm(k_f(spec, z, w)) / R;
      acc += -b * std::polar(1.0, -th);
    }
    return acc * (2.0 * kPi / n);
  };
  AdaptiveOptions opt;
  opt.rel_tol = 1e-6;
  opt.max_segments = 400;
  auto est = integrate_adaptive_complex(theta_avg, 0.0, r_max, opt);
  return est.value / kPi;
}

double ward_residual(const LaplaceKernelSpec& spec, double x) {
  if (!(x > 0.0))
    throw std::domain_error("ward_residual: x must be positive");
  const double h = 1e-3;
  auto d1 = [&](const std::function<double(double)>& g, double step) {
    return (g(x + step) - g(x - step)) / (2.0 * step);
  };
  auto d2 = [&](const std::function<double(double)>& g, double step) {
    return (g(x + step) - 2.0 * g(x) + g(x - step)) / (step * step);
  };
  std::function<double(double)> C = [&](double t) {
    return cauchy_transform(spec, t);
  };
  std::function<double(double)> logR = [&](double t) {
    double r = r_diag(spec, t);
    if (r < 1e-300)
      throw std::runtime_error("ward_residual: R(x) too small for log R");
    return std::log(r);
  };
  // One Richardson level on the central differences.
  double c1 = (4.0 * d1(C, h / 2.0) - d1(C, h)) / 3.0;
  double l2 = (4.0 * d2(logR, h / 2.0) - d2(logR, h)) / 3.0;
  return 0.5 * c1 - r_diag(spec, x) + 0.25 * l2;
}

WardReport ward_report(const LaplaceKernelSpec& spec,
                       const std::vector<double>& grid) {
  WardReport rep;
  rep.grid = grid;
  for (double x : grid) {
    const double h = 1e-3;
    auto cfun = [&](double t) { return cauchy_transform(spec, t); };
    double d1h = (cfun(x + h) - cfun(x - h)) / (2.0 * h);
    double d1h2 = (cfun(x + h / 2.0) - cfun(x - h / 2.0)) / h;
    double lhs = 0.5 * (4.0 * d1h2 - d1h) / 3.0;
    auto lfun = [&](double t) { return std::log(r_diag(spec, t)); };
    double s1 = (lfun(x + h) - 2.0 * lfun(x) + lfun(x - h)) / (h * h);
    double s2 =
        (lfun(x + h / 2.0) - 2.0 * lfun(x) + lfun(x - h / 2.0)) / (h * h / 4.0);
    double r = r_diag(spec, x);
    double rhs = r - 0.25 * (4.0 * s2 - s1) / 3.0;
    rep.R.push_back(r);
    rep.C.push_back(cfun(x));
    rep.lhs.push_back(lhs);
    rep.rhs.push_back(rhs);
    rep.max_residual = std::max(rep.max_residual, std::abs(lhs - rhs));
  }
  return rep;
}

}  // namespace hardwall
