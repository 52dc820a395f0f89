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
#include <optional>

#include "cbdc/common/bytes.hpp"
#include "cbdc/crypto/schnorr.hpp"
#include "cbdc/zkp/bundle.hpp"

namespace cbdc::se {

using DeviceId = std::array<std::uint8_t, 16>;
using Nonce = std::array<std::uint8_t, 8>;

// First 16 bytes of SHA-256("device/v1" || pk).
DeviceId device_id_for(const crypto::GroupElement& device_pk);

// SHA-256("selog/v1" || device_id)
Hash32 log_genesis(const DeviceId& device_id);

struct Policy {
  zkp::Limits limits;
  std::uint64_t expiry_epoch = 0;
};

// Main-wallet instruction to move value onto a sub-wallet.
struct AllocationRecord {
  DeviceId device_id{};
  std::uint64_t amount = 0;
  Nonce nonce{};
  crypto::Signature sig;

  Bytes signed_message() const;
  Hash32 id() const;
  void encode(ByteWriter& w) const;
  static AllocationRecord decode(ByteReader& r);
};

AllocationRecord sign_allocation(const crypto::Scalar& wallet_sk, const DeviceId& device,
                                 std::uint64_t amount, const Nonce& nonce);

enum class LogRole : std::uint8_t { Payer = 1, Payee = 2, Load = 3, Reclaim = 4 };

std::string_view to_string(LogRole role);

// One record of the SE's hash-chained log. Payment entries carry the public
// inputs and the bundle hash; load and reclaim entries carry a plain amount.
struct OfflineLogEntry {
  zkp::TxId tx_id{};
  LogRole role = LogRole::Payer;
  std::optional<zkp::PublicInputs> public_inputs;
  std::uint64_t amount = 0;  // load/reclaim only
  Hash32 bundle_hash{};      // payments: bundle hash; load: allocation id
  Hash32 prev_head{};
  crypto::Signature entry_sig;

  bool is_payment() const { return role == LogRole::Payer || role == LogRole::Payee; }
  Bytes signed_message() const;
  // SHA-256(prev_head || canonical(entry))
  Hash32 next_head() const;

  void encode(ByteWriter& w) const;
  static OfflineLogEntry decode(ByteReader& r);
  bool operator==(const OfflineLogEntry&) const = default;
};

// True iff the entries chain from start_head to end_head and every entry
// is signed by device_pk.
bool verify_log_chain(const std::vector<OfflineLogEntry>& entries, const Hash32& start_head,
                      const Hash32& end_head, const crypto::GroupElement& device_pk);

// Whole log from the device's genesis head.
bool verify_log_chain(const std::vector<OfflineLogEntry>& entries, const Hash32& head,
                      const crypto::GroupElement& device_pk);

// FI acknowledgement of a successful reconciliation up to `head`.
struct SyncAck {
  DeviceId device_id{};
  Hash32 head{};
  std::uint64_t log_length = 0;
  std::uint64_t epoch = 0;
  crypto::Signature fi_sig;

  Bytes signed_message() const;
  void encode(ByteWriter& w) const;
  static SyncAck decode(ByteReader& r);
};

// Protocol signature messages: tx_id || "accept" and
// tx_id || "commit" || accept_hash.
Bytes accept_message(const zkp::TxId& tx_id);
Bytes commit_message(const zkp::TxId& tx_id, const Hash32& accept_hash);

// SE statement that a payment it authorized will never be committed.
struct VoidNotice {
  zkp::TxId tx_id{};
  Hash32 bundle_hash{};
  DeviceId device_id{};
  crypto::Signature sig;

  Bytes signed_message() const;
  bool verify(const crypto::GroupElement& device_pk) const;
  void encode(ByteWriter& w) const;
  static VoidNotice decode(ByteReader& r);
  bool operator==(const VoidNotice&) const = default;
};

SyncAck sign_sync_ack(const crypto::Scalar& fi_sk, const DeviceId& device, const Hash32& head,
                      std::uint64_t log_length, std::uint64_t epoch);

}  // namespace cbdc::se
