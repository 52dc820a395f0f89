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
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "cbdc/protocol/device.hpp"
#include "cbdc/wallet/sync_payload.hpp"

namespace cbdc::wallet {

// Online wallet of one customer. The balance is plaintext: the FI holds it
// in custody. Sub-wallets are the customer's IoT devices.
class MainWallet {
 public:
  MainWallet(const OwnerId& owner_id, const crypto::KeyPair& keys);

  const OwnerId& owner_id() const { return owner_id_; }
  const crypto::KeyPair& keys() const { return keys_; }
  std::uint64_t online_balance() const { return online_balance_; }
  const std::optional<zkp::WalletCertificate>& certificate() const { return certificate_; }
  void set_certificate(const zkp::WalletCertificate& cert) { certificate_ = cert; }

  void credit(std::uint64_t amount);

  void register_device(const se::DeviceId& device_id);
  bool owns(const se::DeviceId& device_id) const;
  const std::vector<se::DeviceId>& sub_wallets() const { return sub_wallets_; }

  // Signs an allocation and loads it into the device's SE. The main balance
  // only moves if the load succeeds. Insufficient, UnknownDevice, or the
  // SE's ExceedsDeviceLimit.
  se::AllocationRecord allocate_to_subwallet(const se::DeviceId& device_id, std::uint64_t amount,
                                             se::SecureElement& se);

  // Moves the SE's whole spendable balance back. Returns the amount.
  std::uint64_t reclaim_from_subwallet(const se::DeviceId& device_id, se::SecureElement& se);

  std::uint64_t allocated_to(const se::DeviceId& device_id) const;
  std::uint64_t reclaimed_from(const se::DeviceId& device_id) const;

  // Devices not owned by this wallet are ignored. Deterministic: same
  // device state and markers give the same payload.
  SyncPayload collect_sync_payload(std::span<const protocol::Device* const> devices) const;

  // Advances the device's marker past an acknowledged segment.
  void mark_synced(const DeviceSegment& segment);

  std::uint64_t synced_index(const se::DeviceId& device_id) const;

 private:
  struct Marker {
    std::uint64_t index = 0;
    Hash32 head{};
  };

  OwnerId owner_id_;
  crypto::KeyPair keys_;
  std::uint64_t online_balance_ = 0;
  std::optional<zkp::WalletCertificate> certificate_;
  std::vector<se::DeviceId> sub_wallets_;
  std::map<se::DeviceId, std::uint64_t> allocated_;
  std::map<se::DeviceId, std::uint64_t> reclaimed_;
  std::uint64_t next_nonce_ = 0;
  std::map<se::DeviceId, Marker> markers_;
  std::set<Hash32> uploaded_evidence_;
};

}  // namespace cbdc::wallet
