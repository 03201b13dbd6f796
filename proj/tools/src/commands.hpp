// Copyright 2026 The conecalc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONECALC_TOOLS_COMMANDS_HPP
#define CONECALC_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace conecalc::cli {

struct Options {
  std::uint64_t seed = 0;
  std::string format = "json";  // "json" or "table"
};

// Exit codes: 0 success, 1 usage/parse error, 2 counterexample found,
// 3 inconclusive.
struct CommandResult {
  int exit_code = 0;
  std::string output;  // rendered, newline-terminated
};

/// Dispatch one command ("hilbert", "dioph simplex", "toric ord", ...).
/// Output is byte-deterministic for identical (input, seed).
CommandResult run_command(const std::string& name, const nlohmann::json& input, const Options& opts);

/// Run a scenario suite document; file references are resolved against
/// base_dir. Nonzero exit when any scenario fails.
CommandResult run_suite(const nlohmann::json& suite, const Options& opts, const std::string& base_dir);

const std::vector<std::string>& command_names();

}  // namespace conecalc::cli

#endif  // CONECALC_TOOLS_COMMANDS_HPP
