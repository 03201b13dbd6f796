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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using conecalc::cli::CommandResult;
using conecalc::cli::Options;

std::string read_input(const std::string& input_file) {
  if (input_file.empty()) {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream fs(input_file);
  if (!fs) throw std::runtime_error("cannot open input file: " + input_file);
  std::ostringstream os;
  os << fs.rdbuf();
  return os.str();
}

int run(const std::string& command, const std::string& input_file, const Options& opts) {
  nlohmann::json input;
  try {
    input = nlohmann::json::parse(read_input(input_file));
  } catch (const std::exception& e) {
    nlohmann::json err;
    err["error"] = std::string("input is not valid JSON: ") + e.what();
    err["path"] = "/";
    std::cout << err.dump() << "\n";
    return 1;
  }
  CommandResult res = conecalc::cli::run_command(command, input, opts);
  std::cout << res.output;
  return res.exit_code;
}

int run_suite_file(const std::string& path, const Options& opts) {
  std::ifstream fs(path);
  if (!fs) {
    nlohmann::json err;
    err["error"] = "cannot open suite file: " + path;
    std::cout << err.dump() << "\n";
    return 1;
  }
  nlohmann::json suite;
  try {
    suite = nlohmann::json::parse(fs);
  } catch (const std::exception& e) {
    nlohmann::json err;
    err["error"] = std::string("suite file is not valid JSON: ") + e.what();
    std::cout << err.dump() << "\n";
    return 1;
  }
  std::string dir = ".";
  auto slash = path.find_last_of('/');
  if (slash != std::string::npos) dir = path.substr(0, slash);
  CommandResult res = conecalc::cli::run_suite(suite, opts, dir);
  std::cout << res.output;
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cone, monoid, Diophantine-approximation and toric base-locus calculator"};
  app.require_subcommand(1);

  Options opts;
  std::string input_file;
  app.add_option("--seed", opts.seed, "seed for sampling commands (default 0)");
  app.add_option("--format", opts.format, "output format: json (byte-exact) or table")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--input", input_file, "input JSON file (default: stdin)");

  std::string selected;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& full, const std::string& desc) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    sub->callback([&selected, full] { selected = full; });
    return sub;
  };

  leaf(&app, "hilbert", "hilbert", "Hilbert basis of a pointed rational cone");
  leaf(&app, "saturate", "saturate", "saturation of an affine monoid");
  leaf(&app, "truncate", "truncate", "uniform or per-generator truncation");
  leaf(&app, "preimage", "preimage", "preimage monoid under an additive map");
  leaf(&app, "fan-verify", "fan-verify", "verify the fan axioms with witnesses");

  CLI::App* dioph = app.add_subcommand("dioph", "Diophantine approximation");
  dioph->require_subcommand(1);
  leaf(dioph, "subspace", "dioph subspace", "smallest rational affine subspace");
  leaf(dioph, "closure", "dioph closure", "orbit closure structure");
  leaf(dioph, "simplex", "dioph simplex", "surrounding rational simplex certificate");
  leaf(dioph, "anchored", "dioph anchored", "anchored two-point certificate");

  CLI::App* pwl = app.add_subcommand("pwl", "superadditive map machinery");
  pwl->require_subcommand(1);
  leaf(pwl, "straighten", "pwl straighten", "straightened values on rays");
  leaf(pwl, "trunc-check", "pwl trunc-check", "additivity up to truncation");
  leaf(pwl, "verify", "pwl verify", "verify a piecewise linear claim");

  CLI::App* toric = app.add_subcommand("toric", "toric testbed");
  toric->require_subcommand(1);
  leaf(toric, "polytope", "toric polytope", "section polytope of a divisor");
  leaf(toric, "h0", "toric h0", "lattice point count of the section polytope");
  leaf(toric, "fixmob", "toric fixmob", "fixed and mobile parts");
  leaf(toric, "ord", "toric ord", "asymptotic order along a ray divisor");
  leaf(toric, "bsl", "toric bsl", "stable or diminished base locus (divisorial part)");
  leaf(toric, "region", "toric region", "parameter region avoiding a base-locus ray");
  leaf(toric, "chambers", "toric chambers", "chamber decomposition of a divisor family");
  leaf(toric, "coxgen", "toric coxgen", "multigraded section-monoid generators");
  leaf(toric, "restrict", "toric restrict", "restriction of sections to a ray divisor");

  std::string suite_file;
  CLI::App* suite = app.add_subcommand("suite", "run a scenario suite");
  suite->add_option("file", suite_file, "scenario suite JSON file")->required();
  suite->callback([&selected] { selected = "suite"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (selected == "suite") return run_suite_file(suite_file, opts);
  return run(selected, input_file, opts);
}
