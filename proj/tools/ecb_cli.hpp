// Copyright 2026 The ecbasis Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ecb::cli {

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::string output;        // empty: standard output
  std::string samples_path;  // CSV samples (convert-curve, convert-surface)
  std::string polygon_path;  // CSV control polygon (sample)
  int grid = 201;
  double middle_tolerance = 1e-6;
  std::string source = "Auto";
  bool flops = false;
  bool oracle = false;
  bool auto_elevate = false;
  bool rational = false;
  int max_order = 8;
  int n_max = 16;
  int delta = 1;
};

// Default grid density, overridden by the ECB_GRID environment variable.
int default_grid();

// Executes one command. Results go to `out` (or config.output); failures are
// reported as error JSON on `out` with a nonzero return value.
int run(const RunConfig& config, std::ostream& out);

// Parses argv and runs. Usage errors print to `err` and return 2.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ecb::cli
