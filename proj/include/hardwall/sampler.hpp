#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "hardwall/cdf_table.hpp"
#include "hardwall/finite_kernel.hpp"

namespace hardwall {

// Per-degree radial CDFs of the density
//   2 r^(2j+1) (rho_*-r)^alpha e^(h(r)) e^(-N q(r)) / ||zeta^j||^2,
// tabulated with `nodes_per_degree` panels on (0, rho_*).
// The moduli of a configuration are independent across degrees (the radial
// determinant factorizes), which is what makes exact sampling possible.
std::vector<CdfTable> build_radial_cdfs(const KernelContext& ctx,
                                        int nodes_per_degree = 4096);

struct SampleBatch {
  std::uint64_t seed = 0;
  int N = 0;
  std::vector<std::vector<std::complex<double>>> configs;
};

// One N-point configuration: modulus j by inverse CDF, angle uniform.
// Deterministic given the seed.
std::vector<std::complex<double>> sample_configuration(
    const std::vector<CdfTable>& tables, std::uint64_t seed);

// `count` configurations with per-configuration substreams seed ^ index,
// drawn in parallel.
SampleBatch sample_batch(const std::vector<CdfTable>& tables,
                         std::uint64_t seed, int count);

// Sorted rescaled maxima omega = (rho_* - max_j |zeta_j|) / a_N.
std::vector<double> empirical_max_modulus(const SampleBatch& batch,
                                          double rho_star, double a_N);

// Kolmogorov-Smirnov distance between the step CDF of sorted samples and a
// reference CDF.
double ks_distance(const std::vector<double>& sorted_samples,
                   const std::function<double(double)>& cdf);

}  // namespace hardwall
