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

#include "cbdc/wallet/sync_payload.hpp"

#include "cbdc/crypto/codec.hpp"

namespace cbdc::wallet {

namespace {

template <class T>
void write_list(ByteWriter& w, const std::vector<T>& items) {
  w.count(items.size());
  for (const auto& item : items) item.encode(w);
}

template <class T>
std::vector<T> read_list(ByteReader& r, std::size_t min_item_size) {
  std::vector<T> out(r.count(min_item_size));
  for (auto& item : out) item = T::decode(r);
  return out;
}

}  // namespace

void DeviceSegment::encode(ByteWriter& w) const {
  w.raw(device_id);
  crypto::write_point(w, device_pk);
  w.u64(start_index).raw(start_head).raw(end_head);
  write_list(w, entries);
  write_list(w, bundles);
  w.count(accepts.size());
  for (const auto& a : accepts) {
    w.raw(a.bundle_hash);
    a.accept.encode(w);
  }
  write_list(w, voids);
  write_list(w, receipts);
}

DeviceSegment DeviceSegment::decode(ByteReader& r) {
  DeviceSegment s;
  s.device_id = r.fixed<16>();
  s.device_pk = crypto::read_point(r);
  s.start_index = r.u64();
  s.start_head = r.fixed<32>();
  s.end_head = r.fixed<32>();
  s.entries = read_list<se::OfflineLogEntry>(r, 64);
  s.bundles = read_list<zkp::ComplianceBundle>(r, 64);
  s.accepts.resize(r.count(32));
  for (auto& a : s.accepts) {
    a.bundle_hash = r.fixed<32>();
    a.accept = protocol::PayAccept::decode(r);
  }
  s.voids = read_list<se::VoidNotice>(r, 64);
  s.receipts = read_list<protocol::Receipt>(r, 64);
  return s;
}

std::size_t SyncPayload::entry_count() const {
  std::size_t n = 0;
  for (const auto& s : segments) n += s.entries.size();
  return n;
}

void SyncPayload::encode(ByteWriter& w) const {
  w.raw(owner_id);
  write_list(w, segments);
}

SyncPayload SyncPayload::decode(ByteReader& r) {
  SyncPayload p;
  p.owner_id = r.fixed<16>();
  p.segments = read_list<DeviceSegment>(r, 64);
  return p;
}

}  // namespace cbdc::wallet
