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

#include "cbdc/wallet/main_wallet.hpp"

#include <algorithm>

#include "cbdc/common/error.hpp"
#include "cbdc/crypto/hash.hpp"

namespace cbdc::wallet {

namespace {

template <class T>
Hash32 evidence_key(std::string_view tag, const Hash32& bundle_hash, const T& item) {
  ByteWriter w;
  w.raw(tag).raw(bundle_hash);
  item.encode(w);
  return crypto::sha256(w.bytes());
}

}  // namespace

MainWallet::MainWallet(const OwnerId& owner_id, const crypto::KeyPair& keys)
    : owner_id_(owner_id), keys_(keys) {}

void MainWallet::credit(std::uint64_t amount) { online_balance_ += amount; }

void MainWallet::register_device(const se::DeviceId& device_id) {
  if (!owns(device_id)) sub_wallets_.push_back(device_id);
}

bool MainWallet::owns(const se::DeviceId& device_id) const {
  return std::find(sub_wallets_.begin(), sub_wallets_.end(), device_id) != sub_wallets_.end();
}

se::AllocationRecord MainWallet::allocate_to_subwallet(const se::DeviceId& device_id,
                                                       std::uint64_t amount,
                                                       se::SecureElement& se) {
  if (!owns(device_id) || se.device_id() != device_id) fail(ErrorCode::UnknownDevice);
  if (amount == 0) fail(ErrorCode::ValueInvalid, "allocation of zero");
  if (amount > online_balance_) fail(ErrorCode::Insufficient);

  se::Nonce nonce{};
  ByteWriter w;
  w.u64(next_nonce_);
  std::copy(w.bytes().begin(), w.bytes().end(), nonce.begin());
  se::AllocationRecord record = se::sign_allocation(keys_.sk, device_id, amount, nonce);
  se.load_value(record);

  next_nonce_ += 1;
  online_balance_ -= amount;
  allocated_[device_id] += amount;
  return record;
}

std::uint64_t MainWallet::reclaim_from_subwallet(const se::DeviceId& device_id,
                                                 se::SecureElement& se) {
  if (!owns(device_id) || se.device_id() != device_id) fail(ErrorCode::UnknownDevice);
  se::ReclaimResult r = se.reclaim();
  online_balance_ += r.amount;
  reclaimed_[device_id] += r.amount;
  return r.amount;
}

std::uint64_t MainWallet::allocated_to(const se::DeviceId& device_id) const {
  auto it = allocated_.find(device_id);
  return it == allocated_.end() ? 0 : it->second;
}

std::uint64_t MainWallet::reclaimed_from(const se::DeviceId& device_id) const {
  auto it = reclaimed_.find(device_id);
  return it == reclaimed_.end() ? 0 : it->second;
}

SyncPayload MainWallet::collect_sync_payload(
    std::span<const protocol::Device* const> devices) const {
  std::vector<const protocol::Device*> mine;
  for (const protocol::Device* d : devices) {
    if (d != nullptr && owns(d->se().device_id())) mine.push_back(d);
  }
  std::sort(mine.begin(), mine.end(), [](const auto* a, const auto* b) {
    return a->se().device_id() < b->se().device_id();
  });

  SyncPayload payload;
  payload.owner_id = owner_id_;
  for (const protocol::Device* d : mine) {
    const se::SecureElement& se = d->se();
    DeviceSegment seg;
    seg.device_id = se.device_id();
    seg.device_pk = se.public_key();
    seg.start_index = synced_index(seg.device_id);
    auto marker = markers_.find(seg.device_id);
    seg.start_head = marker == markers_.end() ? se::log_genesis(seg.device_id) : marker->second.head;
    seg.end_head = se.log_head();

    const auto& log = se.log();
    if (seg.start_index <= log.size()) {
      seg.entries.assign(log.begin() + static_cast<std::ptrdiff_t>(seg.start_index), log.end());
    }
    std::set<Hash32> bundle_hashes;
    for (const auto& e : seg.entries) {
      if (e.is_payment()) bundle_hashes.insert(e.bundle_hash);
    }
    for (const auto& h : bundle_hashes) {
      if (auto it = d->bundles().find(h); it != d->bundles().end()) seg.bundles.push_back(it->second);
    }
    for (const auto& [h, acc] : d->accepts()) {
      if (!uploaded_evidence_.contains(evidence_key("ev/accept", h, acc))) {
        seg.accepts.push_back({h, acc});
      }
    }
    for (const auto& [h, v] : d->voids()) {
      if (!uploaded_evidence_.contains(evidence_key("ev/void", h, v))) seg.voids.push_back(v);
    }
    for (const auto& [h, rc] : d->receipts()) {
      if (!uploaded_evidence_.contains(evidence_key("ev/receipt", h, rc))) {
        seg.receipts.push_back(rc);
      }
    }
    if (seg.entries.empty() && seg.accepts.empty() && seg.voids.empty() && seg.receipts.empty()) {
      continue;
    }
    payload.segments.push_back(std::move(seg));
  }
  return payload;
}

void MainWallet::mark_synced(const DeviceSegment& segment) {
  markers_[segment.device_id] = {segment.end_index(), segment.end_head};
  for (const auto& a : segment.accepts) {
    uploaded_evidence_.insert(evidence_key("ev/accept", a.bundle_hash, a.accept));
  }
  for (const auto& v : segment.voids) {
    uploaded_evidence_.insert(evidence_key("ev/void", v.bundle_hash, v));
  }
  for (const auto& rc : segment.receipts) {
    uploaded_evidence_.insert(evidence_key("ev/receipt", rc.bundle_hash, rc));
  }
}

std::uint64_t MainWallet::synced_index(const se::DeviceId& device_id) const {
  auto it = markers_.find(device_id);
  return it == markers_.end() ? 0 : it->second.index;
}

}  // namespace cbdc::wallet
