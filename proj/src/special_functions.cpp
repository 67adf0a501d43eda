#include "hardwall/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hardwall/quadrature.hpp"

namespace hardwall {

namespace {

// log of the series sum S = sum_{n>=0} x^n / (a (a+1) ... (a+n)),
// so that gamma(a, x) = x^a e^(-x) S.  Valid for x < a + 1.
double log_series_sum(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < 10000; ++n) {
    term *= x / (a + n);
    sum += term;
    if (term < sum * 1e-17) return std::log(sum);
  }
  throw std::runtime_error("incomplete gamma: series did not converge");
}

// log of the continued fraction C with Gamma(a, x) = x^a e^(-x) C,
// by modified Lentz.  Valid for x >= a + 1.
double log_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int n = 1; n < 10000; ++n) {
    double an = -n * (n - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) return std::log(h);
  }
  throw std::runtime_error("incomplete gamma: continued fraction did not converge");
}

void check_args(double a, double x) {
  if (!(a > 0.0)) throw std::domain_error("incomplete gamma: a must be > 0");
  if (!(x >= 0.0)) throw std::domain_error("incomplete gamma: x must be >= 0");
}

}  // namespace

double log_lower_inc_gamma(double a, double x) {
  check_args(a, x);
  if (x == 0.0) return -std::numeric_limits<double>::infinity();
  if (x < a + 1.0)
    return a * std::log(x) - x + log_series_sum(a, x);
  // gamma = Gamma(a) (1 - Q) with Q computed from the continued fraction.
  double log_q = a * std::log(x) - x + log_cf(a, x) - std::lgamma(a);
  return std::lgamma(a) + std::log1p(-std::exp(log_q));
}

double gamma_p(double a, double x) {
  check_args(a, x);
  if (x == 0.0) return 0.0;
  if (x < a + 1.0)
    return std::exp(a * std::log(x) - x + log_series_sum(a, x) -
                    std::lgamma(a));
  return 1.0 - std::exp(a * std::log(x) - x + log_cf(a, x) - std::lgamma(a));
}

double gamma_q(double a, double x) {
  check_args(a, x);
  if (x == 0.0) return 1.0;
  if (x < a + 1.0)
    return 1.0 - std::exp(a * std::log(x) - x + log_series_sum(a, x) -
                          std::lgamma(a));
  return std::exp(a * std::log(x) - x + log_cf(a, x) - std::lgamma(a));
}

double lower_inc_gamma(double a, double x) {
  check_args(a, x);
  if (x == 0.0) return 0.0;
  return std::exp(log_lower_inc_gamma(a, x));
}

double upper_inc_gamma(double a, double x) {
  check_args(a, x);
  if (x < a + 1.0) return std::tgamma(a) * (1.0 - gamma_p(a, x));
  return std::exp(a * std::log(x) - x + log_cf(a, x));
}

double erfc_eval(double x) { return std::erfc(x); }

double phi_alpha(double alpha, double xi) {
  if (!(alpha > -1.0)) throw std::domain_error("phi_alpha: alpha must be > -1");
  // Substitute u = s^(alpha+1)/(alpha+1) to absorb the s^alpha factor, then
  // integrate the smooth remainder e^(-(s - xi)^2 / 2) adaptively.  The
  // Gaussian makes everything beyond s_max = max(xi, 0) + 16 negligible.
  const double ap1 = alpha + 1.0;
  const double s_max = std::max(xi, 0.0) + 16.0;
  const double u_max = std::pow(s_max, ap1) / ap1;
  AdaptiveOptions opt;
  opt.rel_tol = 1e-12;
  opt.initial_segments = 32;
  if (xi > 0.0) opt.split_points = {std::pow(xi, ap1) / ap1};
  auto est = integrate_adaptive(
      [&](double u) {
        double s = std::pow(ap1 * u, 1.0 / ap1);
        double d = s - xi;
        return std::exp(-0.5 * d * d);
      },
      0.0, u_max, opt);
  return est.value;
}

}  // namespace hardwall
