#pragma once

#include <string>

namespace hardwall {

struct RunOptions {
  std::string config_path;
  std::string out_dir = ".";
  unsigned threads = 0;   // 0 = hardware default
  std::string command;    // optional override of the config's "command"
};

// Executes one configured command, writing CSV/JSON artifacts plus a
// manifest into out_dir. Returns 0 on success, 1 on validation errors
// (bad config, unknown command, invalid regime), 2 on numerical failures.
int run(const RunOptions& opts);

}  // namespace hardwall
