// Acceptance suite: one numbered criterion per invocation (argv[1] in 1..10).
// Each check prints a PASS/FAIL line with the measured value and its bound;
// the exit code is 0 only if every check of the criterion passes.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "hardwall/equilibrium.hpp"
#include "hardwall/extremes.hpp"
#include "hardwall/finite_kernel.hpp"
#include "hardwall/limit_kernels.hpp"
#include "hardwall/orthonorms.hpp"
#include "hardwall/quadrature.hpp"
#include "hardwall/radial_potential.hpp"
#include "hardwall/sampler.hpp"
#include "hardwall/special_functions.hpp"

using namespace hardwall;
using cplx = std::complex<double>;

namespace {

struct Checker {
  int failures = 0;
  void expect(bool ok, const std::string& what, double measured,
              double bound) {
    std::printf("  %s: %s (measured %.6e, bound %.6e)\n",
                ok ? "PASS" : "FAIL", what.c_str(), measured, bound);
    if (!ok) ++failures;
  }
  void expect_le(double measured, double bound, const std::string& what) {
    expect(measured <= bound, what, measured, bound);
  }
  void expect_ge(double measured, double bound, const std::string& what) {
    expect(measured >= bound, what, measured, bound);
  }
};

KernelContext ginibre_ctx(int N, double alpha = 0.0) {
  HardWallEnsemble e;
  e.potential = ginibre_potential();
  e.rho_star = 0.8;
  e.alpha = alpha;
  e.N = N;
  return make_kernel_context(e);
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
  return v;
}

// --- 1. mass-one identity of the limit kernel ------------------------------

int criterion_1(Checker& c) {
  for (double a : {-0.5, 0.0, 1.0}) {
    LaplaceKernelSpec spec = canonical_spec(a);
    double worst = 0.0;
    for (double x : linspace(0.1, 5.0, 20))
      worst = std::max(worst, std::abs(mass_one_residual_reduced(spec, x)));
    c.expect_le(worst, 1e-10,
                "reduced mass-one residual, alpha=" + std::to_string(a));
  }
  MassOneResidual r2 = mass_one_residual(canonical_spec(0.0), 1.0);
  c.expect_le(std::abs(r2.direct2d), 1e-3,
              "direct 2D mass-one residual at alpha=0, x=1");
  return c.failures;
}

// --- 2. rescaled Ward equation ----------------------------------------------

int criterion_2(Checker& c) {
  LaplaceKernelSpec spec = canonical_spec(0.0);
  double worst = 0.0;
  for (double x : {0.2, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0})
    worst = std::max(worst, std::abs(ward_residual(spec, x)));
  c.expect_le(worst, 1e-4, "Ward residual, canonical density");

  LaplaceKernelSpec split =
      canonical_spec_on(0.0, {{0.0, 0.4}, {0.6, 1.0}});
  double best = 0.0;
  for (double x : {0.3, 0.6, 1.0, 1.5, 2.2})
    best = std::max(best, std::abs(ward_residual(split, x)));
  c.expect_ge(best, 1e-2, "Ward violation for disconnected support");
  return c.failures;
}

// --- 3. kernel convergence at the wall --------------------------------------

int criterion_3(Checker& c) {
  for (double a : {0.0, 1.0}) {
    // global sup of the limiting diagonal (attained at 0+ for alpha = 0,
    // in the interior for alpha > 0)
    double sup_ref = 0.0;
    for (double x : linspace(0.01, 6.0, 600))
      sup_ref = std::max(sup_ref, k_alpha(a, {x, 0.0}, {x, 0.0}).real());

    auto grid = linspace(0.25, 3.0, 45);
    std::vector<double> sups;
    for (int N : {100, 200, 400, 800}) {
      KernelContext ctx = ginibre_ctx(N, a);
      double s = 0.0;
      for (double x : grid) {
        double rn = rescaled_kernel(ctx, {x, 0.0}, {x, 0.0}).real();
        double rl = k_alpha(a, {x, 0.0}, {x, 0.0}).real();
        s = std::max(s, std::abs(rn - rl));
      }
      sups.push_back(s);
      std::printf("  alpha=%g N=%d sup error %.6e\n", a, N, s);
    }
    bool decreasing = true;
    for (std::size_t i = 1; i < sups.size(); ++i)
      decreasing = decreasing && sups[i] < sups[i - 1];
    c.expect(decreasing, "sup error strictly decreasing, alpha=" +
                             std::to_string(a),
             sups.back(), sups.front());
    c.expect_le(sups.back(), 0.05 * sup_ref,
                "sup error at N=800 vs 5% of sup K, alpha=" +
                    std::to_string(a));
  }
  return c.failures;
}

// --- 4. Weibull law of the maximal modulus ----------------------------------

int criterion_4(Checker& c) {
  std::vector<double> sups;
  for (int N : {125, 250, 500}) {
    KernelContext ctx = ginibre_ctx(N);
    double aN = a_n_const(ctx.ensemble);
    double s = 0.0;
    for (double x : linspace(0.0, 3.0, 61)) {
      double exact =
          x == 0.0 ? 0.0 : 1.0 - max_modulus_cdf(ctx, 0.8 - aN * x);
      s = std::max(s, std::abs(exact - weibull_cdf(0.0, x)));
    }
    sups.push_back(s);
    std::printf("  N=%d sup |exact - Weibull| = %.6e\n", N, s);
  }
  c.expect(sups[0] > sups[1] && sups[1] > sups[2],
           "sup distance decreasing along N=125,250,500", sups.back(),
           sups.front());
  c.expect_le(sups.back(), 0.05, "sup distance at N=500");

  KernelContext ctx = ginibre_ctx(500);
  for (double x : {0.5, 1.0, 2.0}) {
    double v = i_n(ctx, x);
    c.expect_le(std::abs(v - x), 0.05,
                "|I_N(x) - x^(alpha+1)| at x=" + std::to_string(x));
  }
  return c.failures;
}

// --- 5. orthogonal norm asymptotics ------------------------------------------

int criterion_5(Checker& c) {
  {
    HardWallEnsemble e;
    e.potential = ginibre_potential();
    e.rho_star = 0.8;
    e.N = 500;
    NormTable t = compute_norms(e);
    double worst = 0.0;
    int worst_j = 0;
    for (int j = 370; j <= 495; ++j) {  // tau in [tau_* + 0.1, 0.99]
      double ratio = std::exp(norm_asymptotic_high(e, j, 2.0) -
                              t.log_norms[j]);
      if (std::abs(ratio - 1.0) > worst) {
        worst = std::abs(ratio - 1.0);
        worst_j = j;
      }
    }
    std::printf("  worst high-window ratio deviation at j=%d (tau=%.3f)\n",
                worst_j, worst_j / 500.0);
    c.expect_le(worst, 0.02, "high-degree prediction within 2%, N=500");
  }
  {
    HardWallEnsemble e;
    e.potential = ginibre_potential();
    e.rho_star = 0.8;
    e.N = 1000;
    NormTable t = compute_norms(e);
    int j = 640;  // floor(N tau_*)
    double ratio = std::exp(norm_asymptotic_crit(e, j, 4.0) -
                            t.log_norms[j]);
    c.expect_le(std::abs(ratio - 1.0), 0.05,
                "critical-window prediction within 5%, N=1000, j=640");
  }
  return c.failures;
}

// --- 6. negligibility of low and critical degree blocks ----------------------

int criterion_6(Checker& c) {
  {
    KernelContext ctx = ginibre_ctx(400);
    double g = ctx.equilibrium.gamma_N;
    cplx zeta{0.8 - g * 1.0, 0.0};
    // low block: degrees below N (tau_* - log N / sqrt N)
    int m_lo = static_cast<int>(
        400 * (0.64 - std::log(400.0) / std::sqrt(400.0)));
    double low = g * g * kernel_block(ctx, zeta, zeta, 0, m_lo).real();
    double full = rescaled_kernel(ctx, {1.0, 0.0}, {1.0, 0.0}).real();
    c.expect_le(std::abs(low / full), 1e-8,
                "low-degree block share of R_N(1), N=400");
  }
  std::vector<double> shares;
  for (int N : {200, 800}) {
    KernelContext ctx = ginibre_ctx(N);
    double g = ctx.equilibrium.gamma_N;
    cplx zeta{0.8 - g * 1.0, 0.0};
    int lo = static_cast<int>(N * (0.64 - std::log(N) / std::sqrt(N)));
    int hi = std::min(N, static_cast<int>(N * 0.64 + 4.0 * std::sqrt(N)));
    double block = g * g * kernel_block(ctx, zeta, zeta, lo, hi).real();
    double full = rescaled_kernel(ctx, {1.0, 0.0}, {1.0, 0.0}).real();
    shares.push_back(block / full);
    std::printf("  N=%d critical block share %.6e\n", N, block / full);
  }
  c.expect(shares[1] < shares[0], "critical block share decreasing",
           shares[1], shares[0]);
  // alpha = 0: expected decay N^(-1) log N between N=200 and N=800
  double bound_ratio =
      (std::log(800.0) / 800.0) / (std::log(200.0) / 200.0);
  c.expect_le(shares[1] / shares[0], 1.5 * bound_ratio,
              "critical block decay consistent with log(N)/N");
  return c.failures;
}

// --- 7. exact finite-N oracles -----------------------------------------------

int criterion_7(Checker& c) {
  for (int N : {4, 16, 64}) {
    HardWallEnsemble e;
    e.potential = ginibre_potential();
    e.rho_star = 0.8;
    e.N = N;
    NormTable t = compute_norms(e);
    double worst = 0.0;
    for (int j = 0; j < N; ++j) {
      double log_exact =
          log_lower_inc_gamma(j + 1.0, N * 0.64) - (j + 1.0) * std::log(N);
      worst = std::max(worst,
                       std::abs(std::expm1(t.log_norms[j] - log_exact)));
    }
    c.expect_le(worst, 1e-9,
                "norms vs incomplete-gamma closed form, N=" +
                    std::to_string(N));
  }
  for (int N : {16, 64}) {
    KernelContext ctx = ginibre_ctx(N);
    GaussRule rule = gauss_legendre(512);
    double trace = 0.0;
    for (int i = 0; i < rule.nodes.size(); ++i) {
      double r = 0.4 + 0.4 * rule.nodes[i];
      trace += 0.4 * rule.weights[i] * 2.0 * r *
               kernel_eval(ctx, {r, 0.0}, {r, 0.0}).real();
    }
    c.expect_le(std::abs(trace - N), 1e-6,
                "kernel trace equals N, N=" + std::to_string(N));
  }
  {
    KernelContext ctx = ginibre_ctx(8);
    std::vector<std::pair<cplx, cplx>> pairs = {
        {{0.3, 0.1}, {0.3, 0.1}}, {{0.5, -0.2}, {0.2, 0.4}},
        {{0.7, 0.0}, {0.1, -0.3}}};
    GaussRule rad = gauss_legendre(128);
    const int n_theta = 128;
    double worst = 0.0;
    for (auto [z, w] : pairs) {
      cplx acc{0.0, 0.0};
      for (int it = 0; it < n_theta; ++it) {
        double th = 2.0 * M_PI * it / n_theta;
        for (int ir = 0; ir < rad.nodes.size(); ++ir) {
          double r = 0.4 + 0.4 * rad.nodes[ir];
          cplx u = std::polar(r, th);
          acc += 0.4 * rad.weights[ir] * 2.0 * r / n_theta *
                 kernel_eval(ctx, z, u) * kernel_eval(ctx, u, w);
        }
      }
      cplx direct = kernel_eval(ctx, z, w);
      worst = std::max(worst, std::abs(acc - direct) / std::abs(direct));
    }
    c.expect_le(worst, 1e-5, "reproducing property at N=8");
  }
  return c.failures;
}

// --- 8. exact sampler vs the exact max-modulus law ---------------------------

int criterion_8(Checker& c) {
  KernelContext ctx = ginibre_ctx(100);
  auto tables = build_radial_cdfs(ctx);
  MaxModulusLaw law = max_modulus_law(ctx, 400, 1e-3, 8.0);
  double aN = law.a_N;
  auto F = [&](double x) { return law.cdf.value_at(x); };

  const double critical = 1.36 / std::sqrt(2000.0);
  int passes = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    SampleBatch batch = sample_batch(tables, seed, 2000);
    auto omega = empirical_max_modulus(batch, 0.8, aN);
    double d = ks_distance(omega, F);
    if (d < critical) ++passes;
    std::printf("  seed %llu: KS %.5f (critical %.5f)\n",
                static_cast<unsigned long long>(seed), d, critical);
  }
  c.expect_ge(passes, 19, "seeds below the 95% KS critical value");

  SampleBatch a = sample_batch(tables, 7, 50);
  SampleBatch b = sample_batch(tables, 7, 50);
  c.expect(a.configs == b.configs, "deterministic replay (bitwise)",
           a.configs == b.configs ? 0.0 : 1.0, 0.0);
  return c.failures;
}

// --- 9. constrained equilibrium measure --------------------------------------

int criterion_9(Checker& c) {
  HardWallEnsemble e;
  e.potential = ginibre_potential();
  e.rho_star = 0.8;
  e.N = 100;
  EquilibriumData eq = equilibrium_measure(e);
  c.expect_le(std::abs(eq.rho1 - 1.0), 1e-12, "free droplet radius rho_1");
  c.expect_le(std::abs(eq.tau_star - 0.64), 1e-14, "tau_* = 0.64");
  c.expect_le(std::abs(eq.singular_mass - 0.36), 1e-14,
              "singular wall mass 0.36");
  double total =
      ring_mass(e.potential, eq.rho0, e.rho_star) + eq.singular_mass;
  c.expect_le(std::abs(total - 1.0), 1e-10, "total mass 1");
  return c.failures;
}

// --- 10. density profiles ------------------------------------------------------

int criterion_10(Checker& c) {
  KernelContext ctx = ginibre_ctx(100);
  auto diag = [&](double r) {
    return kernel_eval(ctx, {r, 0.0}, {r, 0.0}).real();
  };
  double bulk_lo = diag(0.2), bulk_mid = diag(0.4), bulk_hi = diag(0.6);
  double bulk = (bulk_lo + bulk_mid + bulk_hi) / 3.0;
  double flat = std::max({std::abs(bulk_lo / bulk - 1.0),
                          std::abs(bulk_mid / bulk - 1.0),
                          std::abs(bulk_hi / bulk - 1.0)});
  c.expect_le(flat, 0.10, "bulk density flat to 10%");
  c.expect_le(std::abs(bulk / 100.0 - 1.0), 0.10,
              "bulk intensity near N * Laplacian = 100");
  double spike = 0.0;
  for (double r : linspace(0.75, 0.7999, 50)) spike = std::max(spike, diag(r));
  c.expect_ge(spike / bulk, 2.0, "wall spike above the bulk level");

  for (double a : {-0.5, 0.0, 1.0}) {
    double bad = 0.0;
    for (double x : linspace(0.05, 5.0, 60)) {
      double v = k_alpha(a, {x, 0.0}, {x, 0.0}).real();
      if (!(std::isfinite(v) && v >= 0.0)) bad += 1.0;
    }
    c.expect_le(bad, 0.0,
                "limit density positive and finite, alpha=" +
                    std::to_string(a));
    c.expect_le(std::abs(half_line_mass(a) - 0.5), 1e-8,
                "half-line mass 1/2, alpha=" + std::to_string(a));
  }
  double near0 = k_alpha(0.0, {0.005, 0.0}, {0.005, 0.0}).real();
  c.expect_le(std::abs(near0 - 0.5), 0.02, "K^(0) diagonal -> 1/2 at 0+");
  return c.failures;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: acceptance <criterion 1..10>\n");
    return 2;
  }
  int n = std::atoi(argv[1]);
  Checker c;
  std::printf("criterion %d\n", n);
  int failures = 0;
  switch (n) {
    case 1: failures = criterion_1(c); break;
    case 2: failures = criterion_2(c); break;
    case 3: failures = criterion_3(c); break;
    case 4: failures = criterion_4(c); break;
    case 5: failures = criterion_5(c); break;
    case 6: failures = criterion_6(c); break;
    case 7: failures = criterion_7(c); break;
    case 8: failures = criterion_8(c); break;
    case 9: failures = criterion_9(c); break;
    case 10: failures = criterion_10(c); break;
    default:
      std::fprintf(stderr, "unknown criterion %d\n", n);
      return 2;
  }
  std::printf("criterion %d: %s\n", n, failures == 0 ? "PASS" : "FAIL");
  return failures == 0 ? 0 : 1;
}
