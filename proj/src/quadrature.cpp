#include "hardwall/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <queue>
#include <stdexcept>

namespace hardwall {

namespace {

GaussRule compute_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double eps = 1e-15;
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev initial guess for the i-th root of P_n.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < eps) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  static std::map<int, GaussRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
  return it->second;
}

double gauss_fixed(const std::function<double(double)>& f, double lo,
                   double hi, int n) {
  const GaussRule& g = gauss_legendre(n);
  const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += g.weights[i] * f(c + h * g.nodes[i]);
  return s * h;
}

std::complex<double> gauss_fixed_complex(
    const std::function<std::complex<double>(double)>& f, double lo, double hi,
    int n) {
  const GaussRule& g = gauss_legendre(n);
  const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
  std::complex<double> s{0.0, 0.0};
  for (int i = 0; i < n; ++i) s += g.weights[i] * f(c + h * g.nodes[i]);
  return s * h;
}

namespace {

template <typename T>
struct Segment {
  double lo, hi;
  T value;
  double err;
};

template <typename T>
Segment<T> estimate_segment(const std::function<T(double)>& f, double lo,
                            double hi) {
  const GaussRule& g15 = gauss_legendre(15);
  const GaussRule& g7 = gauss_legendre(7);
  const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
  T v15{};
  for (int i = 0; i < 15; ++i)
    v15 += g15.weights[i] * f(c + h * g15.nodes[i]);
  v15 *= h;
  T v7{};
  for (int i = 0; i < 7; ++i) v7 += g7.weights[i] * f(c + h * g7.nodes[i]);
  v7 *= h;
  return Segment<T>{lo, hi, v15, std::abs(v15 - v7)};
}

template <typename T, typename Est>
Est adaptive_impl(const std::function<T(double)>& f, double lo, double hi,
                  const AdaptiveOptions& opt) {
  Est out;
  if (!(hi > lo)) return out;
  std::vector<double> edges;
  edges.push_back(lo);
  for (double p : opt.split_points)
    if (p > lo && p < hi) edges.push_back(p);
  edges.push_back(hi);
  std::sort(edges.begin(), edges.end());
  // Refine the initial partition to the requested coarse resolution.
  std::vector<double> grid;
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    int parts = std::max(
        1, static_cast<int>(std::ceil(opt.initial_segments *
                                      (edges[k + 1] - edges[k]) / (hi - lo))));
    for (int i = 0; i < parts; ++i)
      grid.push_back(edges[k] + (edges[k + 1] - edges[k]) * i / parts);
  }
  grid.push_back(hi);

  auto cmp = [](const Segment<T>& a, const Segment<T>& b) {
    return a.err < b.err;
  };
  std::priority_queue<Segment<T>, std::vector<Segment<T>>, decltype(cmp)> heap(
      cmp);
  T total{};
  double err = 0.0;
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    auto seg = estimate_segment<T>(f, grid[k], grid[k + 1]);
    total += seg.value;
    err += seg.err;
    heap.push(seg);
  }
  int segments = static_cast<int>(grid.size()) - 1;
  while (segments < opt.max_segments) {
    double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
    if (err <= tol) break;
    Segment<T> worst = heap.top();
    heap.pop();
    total -= worst.value;
    err -= worst.err;
    double mid = 0.5 * (worst.lo + worst.hi);
    for (auto seg : {estimate_segment<T>(f, worst.lo, mid),
                     estimate_segment<T>(f, mid, worst.hi)}) {
      total += seg.value;
      err += seg.err;
      heap.push(seg);
    }
    ++segments;
  }
  out.value = total;
  out.err = err;
  out.converged = err <= std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
  return out;
}

}  // namespace

QuadEstimate integrate_adaptive(const std::function<double(double)>& f,
                                double lo, double hi,
                                const AdaptiveOptions& opt) {
  return adaptive_impl<double, QuadEstimate>(f, lo, hi, opt);
}

ComplexQuadEstimate integrate_adaptive_complex(
    const std::function<std::complex<double>(double)>& f, double lo, double hi,
    const AdaptiveOptions& opt) {
  return adaptive_impl<std::complex<double>, ComplexQuadEstimate>(f, lo, hi,
                                                                  opt);
}

LogIntegralResult integrate_log_singular(
    const std::function<double(double)>& log_g, double lo, double hi,
    double alpha, double tol) {
  if (!(alpha > -1.0)) throw std::domain_error("integrate_log_singular: alpha must be > -1");
  if (!(hi > lo)) throw std::domain_error("integrate_log_singular: empty interval");

  const double ap1 = alpha + 1.0;
  const double span = hi - lo;
  const double U = std::pow(span, ap1) / ap1;
  // r(u): u = (hi - r)^(alpha+1)/(alpha+1)  =>  r = hi - ((alpha+1) u)^(1/(alpha+1))
  auto r_of_u = [&](double u) {
    double t = std::pow(ap1 * u, 1.0 / ap1);
    double r = hi - t;
    if (r <= lo) r = std::nextafter(lo, hi);
    if (r >= hi) r = std::nextafter(hi, lo);
    return r;
  };
  auto phi = [&](double u) { return log_g(r_of_u(u)); };

  // Locate the maximum of phi: coarse scan (uniform plus geometric tails)
  // followed by a golden-section polish around the best sample.
  std::vector<double> scan;
  const int n_uniform = 256, n_geo = 24;
  for (int i = 1; i <= n_uniform; ++i)
    scan.push_back(U * i / (n_uniform + 1.0));
  for (int i = 0; i < n_geo; ++i) {
    double s = std::pow(10.0, -1.0 - 0.5 * i);
    scan.push_back(U * s);
    scan.push_back(U * (1.0 - s));
  }
  double best_u = scan[0], best = -std::numeric_limits<double>::infinity();
  for (double u : scan) {
    double v = phi(u);
    if (v > best) {
      best = v;
      best_u = u;
    }
  }
  {
    double a = std::max(0.0, best_u - U / (n_uniform + 1.0));
    double b = std::min(U, best_u + U / (n_uniform + 1.0));
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = phi(x1), f2 = phi(x2);
    for (int it = 0; it < 40; ++it) {
      if (f1 < f2) {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + gr * (b - a);
        f2 = phi(x2);
      } else {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - gr * (b - a);
        f1 = phi(x1);
      }
    }
    double polished = std::max(f1, f2);
    if (polished > best) best = polished;
  }
  const double shift = best;
  if (!std::isfinite(shift))
    throw std::runtime_error("integrate_log_singular: integrand has no finite maximum");

  AdaptiveOptions opt;
  opt.rel_tol = tol;
  opt.initial_segments = 64;
  opt.max_segments = 6000;
  opt.split_points = {best_u};
  auto est = integrate_adaptive(
      [&](double u) { return std::exp(phi(u) - shift); }, 0.0, U, opt);
  if (!(est.value > 0.0) || !std::isfinite(est.value))
    throw std::runtime_error("integrate_log_singular: integral is not positive/finite");
  double rel = est.err / est.value;
  if (!est.converged && rel > 100.0 * tol)
    throw std::runtime_error(
        "integrate_log_singular: failed to converge (rel err " +
        std::to_string(rel) + ")");
  return LogIntegralResult{std::log(est.value) + shift, rel};
}

}  // namespace hardwall
