// Copyright 2026 The cbdc-offline Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cbdc/common/error.hpp"
#include "cbdc/sim/scenario.hpp"
#include "cbdc/sim/vectors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitExpectation = 1;
constexpr int kExitUsage = 2;

bool suite_supported() {
  const char* s = std::getenv("CBDC_SIM_SUITE");
  return s == nullptr || std::string(s) == "1";
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

int run_command(const std::string& path, std::optional<std::uint64_t> seed, const std::string& report_path,
                bool no_timing) {
  using namespace cbdc;
  try {
    auto result = sim::run_scenario(sim::load_scenario_file(path), seed);
    auto report = no_timing ? sim::without_timing(result.report) : result.report;
    std::string text = sim::dump_report(report);
    if (report_path.empty()) {
      std::cout << text;
    } else if (!write_file(report_path, text)) {
      std::cerr << "error: cannot write " << report_path << "\n";
      return kExitUsage;
    }
    for (const auto& f : result.expectation_failures) std::cerr << "expectation failed: " << f << "\n";
    return result.exit_code() == 0 ? kExitOk : kExitExpectation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int vectors_command(const std::string& out_path, const std::string& check_path) {
  if (!check_path.empty()) {
    std::ifstream in(check_path);
    if (!in) {
      std::cerr << "error: cannot read " << check_path << "\n";
      return kExitUsage;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    auto bad = cbdc::sim::check_vectors(buf.str());
    for (const auto& name : bad) std::cerr << "mismatch: " << name << "\n";
    std::cout << (bad.empty() ? "vectors ok\n" : "vectors differ\n");
    return bad.empty() ? kExitOk : kExitExpectation;
  }
  std::string text = cbdc::sim::vectors_jsonl();
  if (out_path.empty()) {
    std::cout << text;
  } else if (!write_file(out_path, text)) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Offline CBDC simulator"};
  app.require_subcommand(1);

  std::string scenario_path, report_path;
  std::optional<std::uint64_t> seed;
  bool no_timing = false;
  auto* run = app.add_subcommand("run", "Run a scenario and print its report");
  run->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  run->add_option("--seed", seed, "Override the scenario seed");
  run->add_option("--report", report_path, "Write the report here instead of stdout");
  run->add_flag("--no-timing", no_timing, "Omit wall-clock timings from the report");

  std::string vectors_out, vectors_check;
  auto* vectors = app.add_subcommand("vectors", "Emit or check conformance vectors");
  vectors->add_option("--out", vectors_out, "Write vectors here instead of stdout");
  vectors->add_option("--check", vectors_check, "Compare against a vectors file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (!suite_supported()) {
    std::cerr << "error: UnknownSuite: CBDC_SIM_SUITE must be 1\n";
    return kExitUsage;
  }
  if (run->parsed()) return run_command(scenario_path, seed, report_path, no_timing);
  return vectors_command(vectors_out, vectors_check);
}
