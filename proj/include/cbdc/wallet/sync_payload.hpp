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

#include <array>
#include <cstdint>
#include <vector>

#include "cbdc/protocol/messages.hpp"
#include "cbdc/se/types.hpp"

namespace cbdc::wallet {

using OwnerId = std::array<std::uint8_t, 16>;

struct AcceptEvidence {
  Hash32 bundle_hash{};
  protocol::PayAccept accept;

  bool operator==(const AcceptEvidence&) const = default;
};

// New log entries of one device since its last acknowledged sync, plus the
// protocol evidence not uploaded before.
struct DeviceSegment {
  se::DeviceId device_id{};
  crypto::GroupElement device_pk;
  std::uint64_t start_index = 0;
  Hash32 start_head{};
  Hash32 end_head{};
  std::vector<se::OfflineLogEntry> entries;
  std::vector<zkp::ComplianceBundle> bundles;  // one per payment entry, by hash
  std::vector<AcceptEvidence> accepts;
  std::vector<se::VoidNotice> voids;
  std::vector<protocol::Receipt> receipts;

  std::uint64_t end_index() const { return start_index + entries.size(); }
  void encode(ByteWriter& w) const;
  static DeviceSegment decode(ByteReader& r);
  bool operator==(const DeviceSegment&) const = default;
};

// Segments are ordered by device_id; entries keep log order.
struct SyncPayload {
  OwnerId owner_id{};
  std::vector<DeviceSegment> segments;

  bool empty() const { return segments.empty(); }
  std::size_t entry_count() const;
  void encode(ByteWriter& w) const;
  static SyncPayload decode(ByteReader& r);
  bool operator==(const SyncPayload&) const = default;
};

}  // namespace cbdc::wallet
