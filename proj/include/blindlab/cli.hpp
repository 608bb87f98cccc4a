// Copyright 2026 The blindlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace blindlab {

enum ExitCode : int { kExitPass = 0, kExitCheckFailed = 1, kExitUsage = 2 };

struct ExperimentConfig {
  std::string command;
  std::vector<std::string> circuits;
  std::string scheme;
  std::string server = "honest";
  std::string family;
  std::vector<std::string> xs;
  std::string epsilon = "0";
  std::optional<std::uint64_t> seed;
  std::optional<int> budget_n;
  int budget_coins = 20;
  std::optional<std::uint64_t> samples;
  std::string out;
  std::string format = "json";
  std::string mode;
  int m = 1;
  std::string truth_table;
  std::optional<int> s;
  std::string x;
  int random_count = 0;
  int max_n = 4;
  int max_gates = 6;
};

/// Runs one command; returns the process exit code. Reports go to config.out or `out`.
int dispatch(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

/**
 * Parses argv (flags override --config JSON, which overrides the
 * BLINDLAB_BUDGET_N / BLINDLAB_BUDGET_COINS environment, which overrides
 * built-in defaults) and dispatches.
 */
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace blindlab
