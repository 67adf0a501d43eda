#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace hardwall {

// Laplace-type kernel
//   K_f(z,w) = (2 Re z)^(a/2) (2 Re w)^(a/2) int f(t) e^(-t(z + conj(w))) dt
// with f supported on a finite union of disjoint intervals.
struct LaplaceKernelSpec {
  double alpha = 0.0;
  std::function<double(double)> f;
  std::vector<std::pair<double, double>> support;  // disjoint, increasing
};

// f(t) = t^(alpha+1) / Gamma(alpha+1) on (0, 1).
LaplaceKernelSpec canonical_spec(double alpha);

// Same density restricted to a union of intervals E.
LaplaceKernelSpec canonical_spec_on(
    double alpha, const std::vector<std::pair<double, double>>& support);

// The limit kernel K^(alpha) (canonical f); Re z, Re w > 0 required.
std::complex<double> k_alpha(double alpha, std::complex<double> z,
                             std::complex<double> w);

// General Laplace-type kernel over the declared support.
std::complex<double> k_f(const LaplaceKernelSpec& spec, std::complex<double> z,
                         std::complex<double> w);

// One-point function R(x) = K_f(x, x), a function of x = Re z only.
double r_diag(const LaplaceKernelSpec& spec, double x);

// int_0^inf K^(alpha)(x,x) dx; equals 1/2. Numeric on [0, X] plus the
// analytic tail (1/2) int_0^1 Q(alpha+1, 2Xt) dt.
double half_line_mass(double alpha, double X = 30.0);

// G(z,w) = exp(z conj(w) - |z|^2/2 - |w|^2/2).
std::complex<double> ginibre_kernel(std::complex<double> z,
                                    std::complex<double> w);

// F(z) = (1/2) erfc(z / sqrt(2)); entire.
std::complex<double> plasma_F(std::complex<double> z);

// H(z) = (1/sqrt(2 pi)) int_{-inf}^0 e^(-(z-t)^2/2) / F(t) dt, Re z <= 0.
// `truncation` is the Gaussian half-width kept below min(Re z, 0).
std::complex<double> plasma_H(std::complex<double> z, double truncation = 16.0);

// Free-boundary kernel G(z,w) F(z + conj(w)).
std::complex<double> kernel_free(std::complex<double> z,
                                 std::complex<double> w);
// Hard-edge (rho_* = rho_1) kernel G(z,w) H(z + conj(w)); Re z, Re w <= 0.
std::complex<double> kernel_hard(std::complex<double> z,
                                 std::complex<double> w);

// int_{H+} |K_f(x,w)|^2 dA(w) - K_f(x,x), reduced to one dimension:
//   (2x)^a int e^(-2xs) f(s)^2 Gamma(a+1) s^(-(a+1)) ds - R(x).
double mass_one_residual_reduced(const LaplaceKernelSpec& spec, double x);

struct MassOneResidual {
  double reduced = 0.0;
  double direct2d = 0.0;
  bool truncation_flagged = false;
};

// Both the reduced form and a direct truncated 2D quadrature
// (|v| <= v_cut in the imaginary direction of w).
MassOneResidual mass_one_residual(const LaplaceKernelSpec& spec, double x,
                                  double v_cut = 2000.0);

// Cauchy transform C(z) = int B(z,w)/(z-w) dA(w) of the Berezin kernel
// B(z,w) = |K_f(z,w)|^2 / K_f(z,z); depends on x = Re z only and is real:
//   C(x) = L2(x)/R(x) - int f(s) s^(-(a+1)) Gamma(a+1, 2xs) ds,
//   L2(x) = (2x)^a int f(t) e^(-2xt) [Gamma(a+1) int_0^t f(s) s^(-(a+1)) ds] dt.
double cauchy_transform(const LaplaceKernelSpec& spec, double x);

// Direct 2D quadrature of the same transform (polar coordinates about z);
// slow, used as a spot-check of the reduced form.
std::complex<double> cauchy_transform_direct2d(const LaplaceKernelSpec& spec,
                                               std::complex<double> z,
                                               double r_max = 40.0);

// Residual of the rescaled Ward equation in its 1D form,
//   (1/2) C'(x) - R(x) + (1/4) (log R)''(x),
// with central differences (step 1e-3) and one Richardson level.
double ward_residual(const LaplaceKernelSpec& spec, double x);

struct WardReport {
  std::vector<double> grid;
  std::vector<double> R;
  std::vector<double> C;
  std::vector<double> lhs;  // (1/2) C'(x)
  std::vector<double> rhs;  // R(x) - (1/4) (log R)''(x)
  double max_residual = 0.0;
};

WardReport ward_report(const LaplaceKernelSpec& spec,
                       const std::vector<double>& grid);

}  // namespace hardwall
