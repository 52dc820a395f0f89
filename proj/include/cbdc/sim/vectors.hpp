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

#include <string>
#include <vector>

#include "json.hpp"

namespace cbdc::sim {

// Deterministic conformance vectors, one JSON object per line:
// {"name": ..., "input": ..., "output": ...}
std::vector<nlohmann::json> compute_vectors();

std::string vectors_jsonl();

// Recomputes every vector and compares it with `jsonl`. Returns the names of
// vectors that are missing, unknown or different; empty means all match.
std::vector<std::string> check_vectors(const std::string& jsonl);

}  // namespace cbdc::sim
