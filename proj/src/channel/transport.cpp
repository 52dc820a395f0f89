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

#include "cbdc/channel/transport.hpp"

#include <algorithm>

#include "cbdc/channel/frame.hpp"

namespace cbdc::channel {

namespace {

// SplitMix64 finaliser.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double unit(std::uint64_t x) { return static_cast<double>(x >> 11) * 0x1.0p-53; }

}  // namespace

std::string_view to_string(FaultKind kind) {
  switch (kind) {
    case FaultKind::None: return "none";
    case FaultKind::Drop: return "drop";
    case FaultKind::Duplicate: return "dup";
    case FaultKind::Corrupt: return "corrupt";
    case FaultKind::Truncate: return "truncate";
    case FaultKind::Delay: return "delay";
  }
  return "unknown";
}

FaultPlan& FaultPlan::set(std::uint64_t frame_index, Fault fault) {
  overrides_[frame_index] = fault;
  return *this;
}

std::uint64_t FaultPlan::entropy(std::uint64_t frame_index, std::uint64_t salt) const {
  return mix(mix(seed_ ^ mix(frame_index)) + salt);
}

Fault FaultPlan::fault_for(std::uint64_t frame_index) const {
  if (auto it = overrides_.find(frame_index); it != overrides_.end()) return it->second;
  double u = unit(entropy(frame_index, 0));
  double edge = 0;
  if (u < (edge += rates_.drop)) return {FaultKind::Drop, 0};
  if (u < (edge += rates_.duplicate)) return {FaultKind::Duplicate, 0};
  if (u < (edge += rates_.corrupt)) return {FaultKind::Corrupt, 0};
  if (u < (edge += rates_.truncate)) return {FaultKind::Truncate, 0};
  if (u < (edge += rates_.delay)) {
    auto span = std::max<std::uint32_t>(1, rates_.max_delay_ticks);
    return {FaultKind::Delay, 1 + static_cast<std::uint32_t>(entropy(frame_index, 1) % span)};
  }
  return {};
}

std::vector<Delivery> transmit(ByteView frame_bytes, std::uint64_t frame_index,
                               const ChannelConfig& config, std::uint64_t now_tick) {
  const FaultPlan& plan = config.fault_plan;
  const Fault fault = plan.fault_for(frame_index);
  Bytes wire(frame_bytes.begin(), frame_bytes.end());

  switch (fault.kind) {
    case FaultKind::Drop:
      return {};
    case FaultKind::Corrupt:
      if (wire.size() > kFrameHeaderSize) {
        // Stays clear of magic/version/type/length so the damage surfaces
        // as a checksum failure.
        std::size_t pos = kFrameHeaderSize + plan.entropy(frame_index, 2) % (wire.size() - kFrameHeaderSize);
        wire[pos] ^= static_cast<std::uint8_t>(1u << (plan.entropy(frame_index, 3) % 8));
      }
      break;
    case FaultKind::Truncate:
      if (wire.size() > kFrameHeaderSize) {
        std::size_t keep = kFrameHeaderSize + plan.entropy(frame_index, 4) % (wire.size() - kFrameHeaderSize);
        wire.resize(keep);
      }
      break;
    default:
      break;
  }

  auto chunks = chunk_for_mtu(wire, config.profile.mtu, static_cast<std::uint32_t>(frame_index));
  Delivery d;
  d.tick = now_tick + config.profile.latency_ticks +
           (fault.kind == FaultKind::Delay ? fault.delay_ticks : 0);
  d.frame_index = frame_index;
  d.frame_bytes = reassemble(chunks);
  d.fault = fault.kind;
  d.chunk_count = chunks.size();

  std::vector<Delivery> out{d};
  if (fault.kind == FaultKind::Duplicate) {
    out.push_back(d);
    out.back().tick += 1;
  }
  return out;
}

}  // namespace cbdc::channel
