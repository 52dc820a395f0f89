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
#include <map>
#include <string>
#include <vector>

#include "cbdc/common/bytes.hpp"

namespace cbdc::channel {

enum class FaultKind { None, Drop, Duplicate, Corrupt, Truncate, Delay };

std::string_view to_string(FaultKind kind);

struct Fault {
  FaultKind kind = FaultKind::None;
  std::uint32_t delay_ticks = 0;  // Delay only

  bool operator==(const Fault&) const = default;
};

// Per-frame fault probabilities for the seeded part of a plan.
struct FaultRates {
  double drop = 0, duplicate = 0, corrupt = 0, truncate = 0, delay = 0;
  std::uint32_t max_delay_ticks = 5;
};

// Fault schedule: explicit per-index overrides, then seeded rates. A pure
// function of (seed, frame index).
class FaultPlan {
 public:
  FaultPlan() = default;
  explicit FaultPlan(std::uint64_t seed, FaultRates rates = {}) : seed_(seed), rates_(rates) {}

  FaultPlan& set(std::uint64_t frame_index, Fault fault);
  Fault fault_for(std::uint64_t frame_index) const;
  // Deterministic choice of the byte and bit a Corrupt fault flips, and the
  // length a Truncate fault keeps.
  std::uint64_t entropy(std::uint64_t frame_index, std::uint64_t salt) const;

  std::uint64_t seed() const { return seed_; }
  const std::map<std::uint64_t, Fault>& overrides() const { return overrides_; }

 private:
  std::uint64_t seed_ = 0;
  FaultRates rates_;
  std::map<std::uint64_t, Fault> overrides_;
};

// NFC and BLE differ only in MTU and per-frame latency.
struct ChannelProfile {
  std::string name;
  std::size_t mtu = 255;
  std::uint32_t latency_ticks = 1;

  static ChannelProfile nfc() { return {"nfc", 255, 1}; }
  static ChannelProfile ble() { return {"ble", 244, 3}; }
};

struct ChannelConfig {
  ChannelProfile profile = ChannelProfile::nfc();
  FaultPlan fault_plan;
};

struct Delivery {
  std::uint64_t tick = 0;
  std::uint64_t frame_index = 0;
  Bytes frame_bytes;  // reassembled; may be damaged by a fault
  FaultKind fault = FaultKind::None;
  std::size_t chunk_count = 0;

  bool operator==(const Delivery&) const = default;
};

// Chunks the frame for the profile MTU, applies the plan's fault for this
// frame index and returns the resulting deliveries in order.
std::vector<Delivery> transmit(ByteView frame_bytes, std::uint64_t frame_index,
                               const ChannelConfig& config, std::uint64_t now_tick);

}  // namespace cbdc::channel
