#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace hardwall {

// Gauss-Legendre nodes/weights on [-1, 1], computed by Newton iteration and
// cached per n.
struct GaussRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};
const GaussRule& gauss_legendre(int n);

// Fixed n-point Gauss-Legendre quadrature on [lo, hi].
double gauss_fixed(const std::function<double(double)>& f, double lo,
                   double hi, int n = 64);
std::complex<double> gauss_fixed_complex(
    const std::function<std::complex<double>(double)>& f, double lo, double hi,
    int n = 64);

struct AdaptiveOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-300;
  int initial_segments = 8;
  int max_segments = 4000;
  // Optional split points inserted into the initial segmentation.
  std::vector<double> split_points;
};

struct QuadEstimate {
  double value = 0.0;
  double err = 0.0;
  bool converged = true;
};

// Adaptive bisection quadrature; each segment is estimated with a 15-point
// Gauss rule and the error with |G15 - G7|. The worst segment is split until
// the accumulated error estimate meets the tolerance.
QuadEstimate integrate_adaptive(const std::function<double(double)>& f,
                                double lo, double hi,
                                const AdaptiveOptions& opt = {});

struct ComplexQuadEstimate {
  std::complex<double> value{0.0, 0.0};
  double err = 0.0;
  bool converged = true;
};
ComplexQuadEstimate integrate_adaptive_complex(
    const std::function<std::complex<double>(double)>& f, double lo, double hi,
    const AdaptiveOptions& opt = {});

// Result of a log-domain integral: log_value = log of a positive integral.
struct LogIntegralResult {
  double log_value;
  double rel_err_est;
};

// Computes log of  I = int_lo^hi (hi - r)^alpha * exp(log_g(r)) dr
// for alpha > -1. The endpoint singularity is removed by the substitution
// u = (hi - r)^(alpha+1) / (alpha+1), and the integrand is shifted by the
// maximum of log_g located by a scan + golden-section polish, so that adding
// a constant c to log_g shifts the result by exactly c (up to rounding of
// the additions themselves).
//
// Throws std::domain_error for alpha <= -1 or hi <= lo, and
// std::runtime_error if the requested tolerance is not reached.
LogIntegralResult integrate_log_singular(
    const std::function<double(double)>& log_g, double lo, double hi,
    double alpha, double tol = 1e-10);

}  // namespace hardwall
