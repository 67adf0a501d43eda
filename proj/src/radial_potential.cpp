#include "hardwall/radial_potential.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace hardwall {

RadialPotential ginibre_potential() {
  RadialPotential p;
  p.q = [](double r) { return r * r; };
  p.q_prime = [](double r) { return 2.0 * r; };
  p.q_second = [](double) { return 2.0; };
  p.label = "ginibre";
  return p;
}

RadialPotential monomial_potential(int m) {
  if (m < 1) throw std::domain_error("monomial_potential: m must be >= 1");
  RadialPotential p;
  double dm = m;
  p.q = [dm](double r) { return std::pow(r, 2.0 * dm) / dm; };
  p.q_prime = [dm](double r) { return 2.0 * std::pow(r, 2.0 * dm - 1.0); };
  p.q_second = [dm](double r) {
    return 2.0 * (2.0 * dm - 1.0) * std::pow(r, 2.0 * dm - 2.0);
  };
  p.label = "monomial_m" + std::to_string(m);
  return p;
}

namespace {

// Fritsch-Carlson monotone cubic interpolation.
struct Pchip {
  std::vector<double> x, y, d;  // d = endpoint derivatives per node

  Pchip(std::vector<double> xs, std::vector<double> ys)
      : x(std::move(xs)), y(std::move(ys)) {
    const std::size_t n = x.size();
    if (n < 3 || y.size() != n)
      throw std::domain_error("tabulated_potential: need >= 3 samples");
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (!(x[i + 1] > x[i]))
        throw std::domain_error("tabulated_potential: r must be increasing");
    std::vector<double> h(n - 1), s(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      h[i] = x[i + 1] - x[i];
      s[i] = (y[i + 1] - y[i]) / h[i];
    }
    d.assign(n, 0.0);
    d[0] = s[0];
    d[n - 1] = s[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (s[i - 1] * s[i] <= 0.0) {
        d[i] = 0.0;
      } else {
        double w1 = 2.0 * h[i] + h[i - 1];
        double w2 = h[i] + 2.0 * h[i - 1];
        d[i] = (w1 + w2) / (w1 / s[i - 1] + w2 / s[i]);
      }
    }
  }

  double operator()(double xv) const {
    const std::size_t n = x.size();
    std::size_t i = std::upper_bound(x.begin(), x.end(), xv) - x.begin();
    if (i == 0) i = 1;
    if (i >= n) i = n - 1;
    --i;
    double h = x[i + 1] - x[i];
    double t = (xv - x[i]) / h;
    double t2 = t * t, t3 = t2 * t;
    return y[i] * (2 * t3 - 3 * t2 + 1) + h * d[i] * (t3 - 2 * t2 + t) +
           y[i + 1] * (-2 * t3 + 3 * t2) + h * d[i + 1] * (t3 - t2);
  }
};

}  // namespace

RadialPotential tabulated_potential(const std::vector<double>& r,
                                    const std::vector<double>& q,
                                    const std::string& label) {
  auto spline = std::make_shared<Pchip>(r, q);
  RadialPotential p;
  p.q = [spline](double rv) { return (*spline)(rv); };
  p.q_prime = [spline](double rv) {
    double h = 1e-5 * std::max(1.0, rv);
    return ((*spline)(rv + h) - (*spline)(rv - h)) / (2.0 * h);
  };
  p.q_second = [spline](double rv) {
    double h = 1e-5 * std::max(1.0, rv);
    return ((*spline)(rv + h) - 2.0 * (*spline)(rv) + (*spline)(rv - h)) /
           (h * h);
  };
  p.label = label;
  return p;
}

double laplacian(const RadialPotential& p, double r) {
  if (!(r > 0.0)) throw std::domain_error("laplacian: r must be > 0");
  return (p.q_second(r) + p.q_prime(r) / r) / 4.0;
}

double v_tau(const RadialPotential& p, double tau, double r) {
  if (!(r > 0.0)) throw std::domain_error("v_tau: r must be > 0");
  return p.q(r) - 2.0 * tau * std::log(r);
}

double v_tau_prime(const RadialPotential& p, double tau, double r) {
  if (!(r > 0.0)) throw std::domain_error("v_tau_prime: r must be > 0");
  return p.q_prime(r) - 2.0 * tau / r;
}

double q_n_eval(const HardWallEnsemble& e, double r) {
  if (!(r > 0.0 && r < e.rho_star))
    throw std::domain_error("q_n_eval: r must lie in (0, rho_star)");
  double v = e.potential.q(r) -
             (e.alpha / e.N) * std::log(e.rho_star - r);
  if (e.h) v -= e.h(r) / e.N;
  return v;
}

void validate(const HardWallEnsemble& e) {
  if (!(e.alpha > -1.0))
    throw std::domain_error("ensemble: alpha must be > -1");
  if (e.N < 1) throw std::domain_error("ensemble: N must be >= 1");
  if (!(e.rho_star > 0.0))
    throw std::domain_error("ensemble: rho_star must be > 0");
  if (e.h && std::abs(e.h(e.rho_star)) > 1e-14)
    throw std::domain_error("ensemble: h(rho_star) must vanish");
}

}  // namespace hardwall
