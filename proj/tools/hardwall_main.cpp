#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hardwall/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Hard-wall Coulomb gas numerics"};
  app.require_subcommand(0, 1);
  app.fallthrough(true);

  hardwall::RunOptions opts;
  app.add_option("--config", opts.config_path, "JSON config file")
      ->required();
  app.add_option("--out", opts.out_dir, "Output directory");
  app.add_option("--threads", opts.threads, "Worker thread count (0 = auto)");

  const std::vector<std::string> commands = {
      "equilibrium", "norms",         "kernel", "profile", "limit-density",
      "massone-check", "ward-check", "maxmod", "sample",  "sample-maxmod"};
  for (const auto& name : commands) {
    auto* sub = app.add_subcommand(name);
    sub->callback([&opts, name] { opts.command = name; });
  }

  CLI11_PARSE(app, argc, argv);
  return hardwall::run(opts);
}
