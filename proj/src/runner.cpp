#include "hardwall/runner.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "hardwall/equilibrium.hpp"
#include "hardwall/extremes.hpp"
#include "hardwall/finite_kernel.hpp"
#include "hardwall/limit_kernels.hpp"
#include "hardwall/orthonorms.hpp"
#include "hardwall/parallel.hpp"
#include "hardwall/radial_potential.hpp"
#include "hardwall/sampler.hpp"

namespace hardwall {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Collects artifacts and flushes them atomically (temp file + rename) only
// once the whole command has succeeded, so failures leave no partial output.
class ArtifactWriter {
 public:
  ArtifactWriter(fs::path dir, std::uint64_t config_hash)
      : dir_(std::move(dir)), hash_(config_hash) {}

  void add(const std::string& name, const std::string& content) {
    pending_.emplace_back(name, content);
  }

  void commit() {
    fs::create_directories(dir_);
    json manifest;
    std::ostringstream hash_os;
    hash_os << std::hex << hash_;
    manifest["config_hash_fnv1a"] = hash_os.str();
    manifest["artifacts"] = json::array();
    for (const auto& [name, content] : pending_) {
      write_atomic(dir_ / name, content);
      manifest["artifacts"].push_back(name);
    }
    write_atomic(dir_ / "manifest.json", manifest.dump(2) + "\n");
  }

 private:
  static void write_atomic(const fs::path& path, const std::string& content) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cannot open " + tmp.string());
      out << content;
    }
    fs::rename(tmp, path);
  }

  fs::path dir_;
  std::uint64_t hash_;
  std::vector<std::pair<std::string, std::string>> pending_;
};

RadialPotential potential_from(const json& cfg) {
  std::string name = cfg.value("potential", json{{"name", "ginibre"}})
                         .value("name", "ginibre");
  if (name == "ginibre") return ginibre_potential();
  if (name == "monomial")
    return monomial_potential(cfg["potential"].value("m", 1));
  if (name == "tabulated") {
    const json& p = cfg["potential"];
    return tabulated_potential(p["r"].get<std::vector<double>>(),
                               p["q"].get<std::vector<double>>());
  }
  throw std::domain_error("unknown potential: " + name);
}

HardWallEnsemble ensemble_from(const json& cfg) {
  HardWallEnsemble e;
  e.potential = potential_from(cfg);
  e.rho_star = cfg.value("rho_star", 0.8);
  e.alpha = cfg.value("alpha", 0.0);
  e.N = cfg.value("N", 100);
  if (e.N < 2) throw std::domain_error("config: N must be >= 2");
  json h = cfg.value("h", json("zero"));
  if (h.is_string()) {
    if (h.get<std::string>() != "zero")
      throw std::domain_error("config: h must be \"zero\" or {coeffs: [...]}");
  } else {
    // h(r) = sum_k c_k (rho_* - r)^k, k >= 1, so h(rho_*) = 0 automatically.
    auto coeffs = h.at("coeffs").get<std::vector<double>>();
    double rs = e.rho_star;
    e.h = [coeffs, rs](double r) {
      double v = 0.0, p = 1.0;
      for (double c : coeffs) {
        p *= rs - r;
        v += c * p;
      }
      return v;
    };
  }
  validate(e);
  return e;
}

std::vector<double> grid_from(const json& cfg, const std::string& key,
                              double lo, double hi, int n) {
  if (cfg.contains(key)) {
    const json& g = cfg[key];
    if (g.is_array()) {
      auto v = g.get<std::vector<double>>();
      if (v.empty()) throw std::domain_error("config: empty grid " + key);
      for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (!(v[i + 1] > v[i]))
          throw std::domain_error("config: grid " + key + " must be sorted");
      return v;
    }
    lo = g.value("min", lo);
    hi = g.value("max", hi);
    n = g.value("points", n);
  }
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
  return v;
}

void cmd_equilibrium(const json& cfg, ArtifactWriter& out) {
  HardWallEnsemble e = ensemble_from(cfg);
  EquilibriumData eq = equilibrium_measure(e);
  std::ostringstream csv;
  csv << "r,density\n";
  for (double r : grid_from(cfg, "grid", std::max(eq.rho0, 1e-6) , e.rho_star, 200))
    csv << fmt(r) << "," << fmt(eq.density(r)) << "\n";
  out.add("equilibrium.csv", csv.str());
  json summary;
  summary["rho0"] = eq.rho0;
  summary["rho1"] = eq.rho1;
  summary["tau_star"] = eq.tau_star;
  summary["singular_mass"] = eq.singular_mass;
  summary["gamma_N"] = eq.gamma_N;
  summary["ring_mass"] = ring_mass(e.potential, eq.rho0, e.rho_star);
  out.add("equilibrium.json", summary.dump(2) + "\n");
}

void cmd_norms(const json& cfg, ArtifactWriter& out) {
  HardWallEnsemble e = ensemble_from(cfg);
  NormTable t = compute_norms(e);
  EquilibriumData eq = equilibrium_measure(e);
  double M = cfg.value("M", 4.0);
  std::ostringstream csv;
  csv << "j,log_norm,high_prediction,crit_prediction,window_tag\n";
  for (int j = 0; j < e.N; ++j) {
    double tau = static_cast<double>(j) / e.N;
    std::string tag = "bulk";
    std::string high = "nan", crit = "nan";
    if (tau >= eq.tau_star + M / std::sqrt(e.N)) {
      high = fmt(norm_asymptotic_high(e, j, M));
      tag = "high";
    }
    double delta_N = std::log(e.N) / std::sqrt(e.N);
    if (tau >= eq.tau_star - delta_N &&
        tau <= eq.tau_star + M / std::sqrt(e.N)) {
      crit = fmt(norm_asymptotic_crit(e, j, M));
      tag = tag == "high" ? "high+crit" : "critical";
    }
    csv << j << "," << fmt(t.log_norms[j]) << "," << high << "," << crit
        << "," << tag << "\n";
  }
  out.add("norms.csv", csv.str());
}

void cmd_kernel(const json& cfg, ArtifactWriter& out) {
  HardWallEnsemble e = ensemble_from(cfg);
  KernelContext ctx = make_kernel_context(e);
  auto grid = grid_from(cfg, "grid", 0.25, 3.0, 56);
  std::ostringstream csv;
  csv << "x,R_N,R_limit,abs_err\n";
  std::vector<std::array<double, 3>> rows(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    double x = grid[i];
    double rn = rescaled_kernel(ctx, {x, 0.0}, {x, 0.0}).real();
    double rl = k_alpha(e.alpha, {x, 0.0}, {x, 0.0}).real();
    rows[i] = {rn, rl, std::abs(rn - rl)};
  });
  for (std::size_t i = 0; i < grid.size(); ++i)
    csv << fmt(grid[i]) << "," << fmt(rows[i][0]) << "," << fmt(rows[i][1])
        << "," << fmt(rows[i][2]) << "\n";
  out.add("kernel.csv", csv.str());
}

void cmd_profile(const json& cfg, ArtifactWriter& out) {
  HardWallEnsemble e = ensemble_from(cfg);
  KernelContext ctx = make_kernel_context(e);
  auto grid = grid_from(cfg, "grid", e.rho_star / 400.0,
                        e.rho_star * (1.0 - 1e-4), 400);
  std::ostringstream csv;
  csv << "r,density\n";
  std::vector<double> rows(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    rows[i] = kernel_eval(ctx, {grid[i], 0.0}, {grid[i], 0.0}).real();
  });
  for (std::size_t i = 0; i < grid.size(); ++i)
    csv << fmt(grid[i]) << "," << fmt(rows[i]) << "\n";
  out.add("profile.csv", csv.str());
}

void cmd_limit_density(const json& cfg, ArtifactWriter& out) {
  std::vector<double> alphas =
      cfg.value("alphas", std::vector<double>{0.0, -0.5, 1.0});
  auto grid = grid_from(cfg, "grid", 0.01, 6.0, 300);
  for (double a : alphas) {
    std::ostringstream csv;
    csv << "x,K_alpha_diag\n";
    for (double x : grid)
      csv << fmt(x) << "," << fmt(k_alpha(a, {x, 0.0}, {x, 0.0}).real())
          << "\n";
    std::ostringstream name;
    name << "limit_density_alpha_" << a << ".csv";
    out.add(name.str(), csv.str());
  }
}

LaplaceKernelSpec spec_from(const json& cfg, double alpha) {
  if (cfg.contains("support")) {
    std::vector<std::pair<double, double>> support;
    for (const auto& iv : cfg["support"])
      support.emplace_back(iv.at(0).get<double>(), iv.at(1).get<double>());
    return canonical_spec_on(alpha, support);
  }
  return canonical_spec(alpha);
}

void cmd_massone_check(const json& cfg, ArtifactWriter& out) {
  std::vector<double> alphas =
      cfg.value("alphas", std::vector<double>{-0.5, 0.0, 1.0});
  auto grid = grid_from(cfg, "grid", 0.1, 5.0, 20);
  bool with_2d = cfg.value("direct_2d", false);
  std::ostringstream csv;
  csv << "alpha,x,reduced_residual,direct2d_residual\n";
  for (double a : alphas) {
    LaplaceKernelSpec spec = spec_from(cfg, a);
    for (double x : grid) {
      if (with_2d) {
        MassOneResidual r = mass_one_residual(spec, x);
        csv << fmt(a) << "," << fmt(x) << "," << fmt(r.reduced) << ","
            << fmt(r.direct2d) << "\n";
      } else {
        csv << fmt(a) << "," << fmt(x) << ","
            << fmt(mass_one_residual_reduced(spec, x)) << ",nan\n";
      }
    }
  }
  out.add("massone.csv", csv.str());
}

void cmd_ward_check(const json& cfg, ArtifactWriter& out) {
  double alpha = cfg.value("alpha", 0.0);
  LaplaceKernelSpec spec = spec_from(cfg, alpha);
  auto grid = grid_from(cfg, "grid", 0.2, 3.0, 29);
  WardReport rep = ward_report(spec, grid);
  std::ostringstream csv;
  csv << "x,R,C,lhs,rhs,residual\n";
  for (std::size_t i = 0; i < rep.grid.size(); ++i)
    csv << fmt(rep.grid[i]) << "," << fmt(rep.R[i]) << "," << fmt(rep.C[i])
        << "," << fmt(rep.lhs[i]) << "," << fmt(rep.rhs[i]) << ","
        << fmt(rep.lhs[i] - rep.rhs[i]) << "\n";
  out.add("ward.csv", csv.str());
  json summary;
  summary["max_residual"] = rep.max_residual;
  out.add("ward.json", summary.dump(2) + "\n");
}

void cmd_maxmod(const json& cfg, ArtifactWriter& out) {
  HardWallEnsemble e = ensemble_from(cfg);
  KernelContext ctx = make_kernel_context(e);
  MaxModulusLaw law = max_modulus_law(ctx, cfg.value("grid_points", 200));
  std::ostringstream csv;
  csv << "x,exact_cdf,weibull_cdf,abs_err\n";
  double sup_err = 0.0;
  for (std::size_t i = 0; i < law.cdf.nodes.size(); ++i) {
    double x = law.cdf.nodes[i];
    double exact = law.cdf.values[i];
    double wb = weibull_cdf(e.alpha, x);
    sup_err = std::max(sup_err, std::abs(exact - wb));
    csv << fmt(x) << "," << fmt(exact) << "," << fmt(wb) << ","
        << fmt(std::abs(exact - wb)) << "\n";
  }
  out.add("maxmod.csv", csv.str());
  json summary;
  summary["a_N"] = law.a_N;
  summary["sup_error_vs_weibull"] = sup_err;
  out.add("maxmod.json", summary.dump(2) + "\n");
}

void cmd_sample(const json& cfg, ArtifactWriter& out) {
  HardWallEnsemble e = ensemble_from(cfg);
  KernelContext ctx = make_kernel_context(e);
  auto tables = build_radial_cdfs(ctx);
  std::uint64_t seed = cfg.value("seed", std::uint64_t{1});
  int count = cfg.value("count", 100);
  SampleBatch batch = sample_batch(tables, seed, count);
  std::ostringstream csv;
  csv << "config_id,re,im\n";
  for (int i = 0; i < count; ++i)
    for (const auto& z : batch.configs[i])
      csv << i << "," << fmt(z.real()) << "," << fmt(z.imag()) << "\n";
  out.add("samples.csv", csv.str());
}

void cmd_sample_maxmod(const json& cfg, ArtifactWriter& out) {
  HardWallEnsemble e = ensemble_from(cfg);
  KernelContext ctx = make_kernel_context(e);
  auto tables = build_radial_cdfs(ctx);
  std::uint64_t seed = cfg.value("seed", std::uint64_t{1});
  int count = cfg.value("count", 2000);
  SampleBatch batch = sample_batch(tables, seed, count);
  auto omegas = empirical_max_modulus(batch, e.rho_star, a_n_const(e));
  std::ostringstream csv;
  csv << "x,empirical_cdf\n";
  for (std::size_t i = 0; i < omegas.size(); ++i)
    csv << fmt(omegas[i]) << ","
        << fmt(static_cast<double>(i + 1) / omegas.size()) << "\n";
  out.add("sample_maxmod.csv", csv.str());
}

}  // namespace

int run(const RunOptions& opts) {
  json cfg;
  std::string raw;
  try {
    std::ifstream in(opts.config_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + opts.config_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    raw = ss.str();
    cfg = json::parse(raw);
  } catch (const std::exception& ex) {
    std::fprintf(stderr, "config error: %s\n", ex.what());
    return 1;
  }

  std::string command = opts.command;
  if (command.empty()) command = cfg.value("command", "");
  if (!opts.command.empty() && cfg.contains("command") &&
      cfg["command"] != opts.command) {
    std::fprintf(stderr, "config error: command mismatch (config says %s)\n",
                 cfg["command"].get<std::string>().c_str());
    return 1;
  }

  set_thread_count(opts.threads);
  ArtifactWriter out(opts.out_dir, fnv1a(raw));
  try {
    if (command == "equilibrium") cmd_equilibrium(cfg, out);
    else if (command == "norms") cmd_norms(cfg, out);
    else if (command == "kernel") cmd_kernel(cfg, out);
    else if (command == "profile") cmd_profile(cfg, out);
    else if (command == "limit-density") cmd_limit_density(cfg, out);
    else if (command == "massone-check") cmd_massone_check(cfg, out);
    else if (command == "ward-check") cmd_ward_check(cfg, out);
    else if (command == "maxmod") cmd_maxmod(cfg, out);
    else if (command == "sample") cmd_sample(cfg, out);
    else if (command == "sample-maxmod") cmd_sample_maxmod(cfg, out);
    else {
      std::fprintf(stderr, "config error: unknown command '%s'\n",
                   command.c_str());
      return 1;
    }
    out.commit();
  } catch (const std::domain_error& ex) {
    std::fprintf(stderr, "validation error: %s\n", ex.what());
    return 1;
  } catch (const std::exception& ex) {
    std::fprintf(stderr, "numerical failure: %s\n", ex.what());
    return 2;
  }
  return 0;
}

}  // namespace hardwall
