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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace cbdc::sim {

struct ScenarioResult {
  nlohmann::json report;
  std::vector<std::string> expectation_failures;

  int exit_code() const { return expectation_failures.empty() ? 0 : 1; }
};

// ScenarioInvalid if the file cannot be read or is not JSON.
nlohmann::json load_scenario_file(const std::string& path);

// Validates the whole scenario before running any step; malformed input
// raises ScenarioInvalid. Domain failures of individual steps are recorded
// in the report's "step_errors".
ScenarioResult run_scenario(const nlohmann::json& scenario,
                            std::optional<std::uint64_t> seed_override = std::nullopt);

// Report without its wall-clock "timing" section.
nlohmann::json without_timing(nlohmann::json report);

// Canonical text form: sorted keys, two-space indent, trailing newline.
std::string dump_report(const nlohmann::json& report);

}  // namespace cbdc::sim
