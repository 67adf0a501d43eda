#include "hardwall/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "hardwall/parallel.hpp"
#include "hardwall/quadrature.hpp"

namespace hardwall {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

CdfTable build_one(const KernelContext& ctx, int j, int nodes_per_degree) {
  const HardWallEnsemble& e = ctx.ensemble;
  const double rs = e.rho_star;
  const double log_norm = ctx.norms.log_norms[j];
  const double dj = j, N = e.N;

  auto log_density = [&](double s) {  // includes the wall factor
    double v = std::log(2.0) + (2.0 * dj + 1.0) * std::log(s) +
               e.alpha * std::log(rs - s) - N * e.potential.q(s) - log_norm;
    if (e.h) v += e.h(s);
    return v;
  };
  auto log_g = [&](double s) {  // wall factor handled by alpha parameter
    double v = std::log(2.0) + (2.0 * dj + 1.0) * std::log(s) -
               N * e.potential.q(s) - log_norm;
    if (e.h) v += e.h(s);
    return v;
  };

  // Node layout: uniform over most of (0, rho_*), geometric refinement over
  // the last eighth so the algebraic wall factor is resolved; the final
  // sliver is integrated with the singularity-aware routine.
  const int geo = std::min(256, nodes_per_degree / 4);
  const int uni = nodes_per_degree - geo;
  const double split = rs * (1.0 - 0.125);
  std::vector<double> nodes;
  nodes.reserve(nodes_per_degree + 1);
  for (int k = 0; k <= uni; ++k) nodes.push_back(split * k / uni);
  const double d0 = rs - split, d1 = rs * 1e-12;
  for (int k = 1; k < geo; ++k)
    nodes.push_back(rs - d0 * std::pow(d1 / d0, static_cast<double>(k) / geo));
  nodes.push_back(rs);

  const GaussRule& g8 = gauss_legendre(8);
  std::vector<double> values(nodes.size(), 0.0);
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    double mass;
    if (k + 2 == nodes.size()) {
      mass = std::exp(
          integrate_log_singular(log_g, nodes[k], rs, e.alpha, 1e-10)
              .log_value);
    } else {
      double lo = std::max(nodes[k], rs * 1e-300), hi = nodes[k + 1];
      double c = 0.5 * (lo + hi), hh = 0.5 * (hi - lo);
      mass = 0.0;
      for (int i = 0; i < 8; ++i)
        mass += g8.weights[i] * std::exp(log_density(c + hh * g8.nodes[i]));
      mass *= hh;
    }
    values[k + 1] = values[k] + mass;
  }
  double total = values.back();
  if (!(std::abs(total - 1.0) < 1e-6))
    throw std::runtime_error(
        "build_radial_cdfs: degree " + std::to_string(j) +
        " normalizes to " + std::to_string(total) + ", not 1");
  for (double& v : values) v = std::min(v / total, 1.0);

  CdfTable t;
  t.nodes = std::move(nodes);
  t.values = std::move(values);
  t.degree = j;
  t.validate();
  return t;
}

}  // namespace

std::vector<CdfTable> build_radial_cdfs(const KernelContext& ctx,
                                        int nodes_per_degree) {
  std::vector<CdfTable> tables(ctx.ensemble.N);
  parallel_for(static_cast<std::size_t>(ctx.ensemble.N), [&](std::size_t j) {
    try {
      tables[j] = build_one(ctx, static_cast<int>(j), nodes_per_degree);
    } catch (const std::runtime_error&) {
      // One retry at higher resolution before giving up.
      tables[j] = build_one(ctx, static_cast<int>(j), 4 * nodes_per_degree);
    }
  });
  return tables;
}

std::vector<std::complex<double>> sample_configuration(
    const std::vector<CdfTable>& tables, std::uint64_t seed) {
  std::mt19937_64 rng(splitmix64(seed));
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<std::complex<double>> config;
  config.reserve(tables.size());
  for (const CdfTable& t : tables) {
    double r = t.inverse(unif(rng));
    double theta = 2.0 * 3.14159265358979323846 * unif(rng);
    config.push_back(std::polar(r, theta));
  }
  return config;
}

SampleBatch sample_batch(const std::vector<CdfTable>& tables,
                         std::uint64_t seed, int count) {
  SampleBatch batch;
  batch.seed = seed;
  batch.N = static_cast<int>(tables.size());
  batch.configs.resize(count);
  // Decorrelate the master seed before indexing: seed ^ i would hand
  // different masters the same set of substreams, just permuted.
  const std::uint64_t stream_base = splitmix64(seed);
  parallel_for(static_cast<std::size_t>(count), [&](std::size_t i) {
    batch.configs[i] =
        sample_configuration(tables, stream_base + static_cast<std::uint64_t>(i));
  });
  return batch;
}

std::vector<double> empirical_max_modulus(const SampleBatch& batch,
                                          double rho_star, double a_N) {
  std::vector<double> omegas;
  omegas.reserve(batch.configs.size());
  for (const auto& config : batch.configs) {
    double m = 0.0;
    for (const auto& z : config) m = std::max(m, std::abs(z));
    omegas.push_back((rho_star - m) / a_N);
  }
  std::sort(omegas.begin(), omegas.end());
  return omegas;
}

double ks_distance(const std::vector<double>& sorted_samples,
                   const std::function<double(double)>& cdf) {
  const std::size_t n = sorted_samples.size();
  if (n == 0) throw std::domain_error("ks_distance: empty sample");
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double F = cdf(sorted_samples[i]);
    d = std::max(d, std::abs(F - static_cast<double>(i) / n));
    d = std::max(d, std::abs(static_cast<double>(i + 1) / n - F));
  }
  return d;
}

}  // namespace hardwall
