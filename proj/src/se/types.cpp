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

#include "cbdc/se/types.hpp"

#include "cbdc/common/error.hpp"
#include "cbdc/crypto/codec.hpp"
#include "cbdc/crypto/hash.hpp"

namespace cbdc::se {

using namespace crypto;

DeviceId device_id_for(const GroupElement& device_pk) {
  ByteWriter w;
  w.raw("device/v1");
  write_point(w, device_pk);
  Hash32 h = sha256(w.bytes());
  DeviceId id{};
  std::copy(h.begin(), h.begin() + id.size(), id.begin());
  return id;
}

Hash32 log_genesis(const DeviceId& device_id) {
  ByteWriter w;
  w.raw("selog/v1").raw(device_id);
  return sha256(w.bytes());
}

Bytes AllocationRecord::signed_message() const {
  ByteWriter w;
  w.raw("alloc/v1").raw(device_id).u64(amount).raw(nonce);
  return std::move(w).take();
}

Hash32 AllocationRecord::id() const { return sha256(encode_to_bytes(*this)); }

void AllocationRecord::encode(ByteWriter& w) const {
  w.raw(device_id).u64(amount).raw(nonce);
  write_signature(w, sig);
}

AllocationRecord AllocationRecord::decode(ByteReader& r) {
  AllocationRecord a;
  a.device_id = r.fixed<16>();
  a.amount = r.u64();
  a.nonce = r.fixed<8>();
  a.sig = read_signature(r);
  return a;
}

AllocationRecord sign_allocation(const Scalar& wallet_sk, const DeviceId& device,
                                 std::uint64_t amount, const Nonce& nonce) {
  AllocationRecord a;
  a.device_id = device;
  a.amount = amount;
  a.nonce = nonce;
  a.sig = schnorr_sign(wallet_sk, a.signed_message());
  return a;
}

std::string_view to_string(LogRole role) {
  switch (role) {
    case LogRole::Payer: return "payer";
    case LogRole::Payee: return "payee";
    case LogRole::Load: return "load";
    case LogRole::Reclaim: return "reclaim";
  }
  return "unknown";
}

namespace {

void encode_body(ByteWriter& w, const OfflineLogEntry& e) {
  w.raw(e.tx_id).u8(static_cast<std::uint8_t>(e.role));
  w.u8(e.public_inputs ? 1 : 0);
  if (e.public_inputs) e.public_inputs->encode(w);
  w.u64(e.amount).raw(e.bundle_hash).raw(e.prev_head);
}

}  // namespace

Bytes OfflineLogEntry::signed_message() const {
  ByteWriter w;
  w.raw("selog-entry/v1");
  encode_body(w, *this);
  return std::move(w).take();
}

Hash32 OfflineLogEntry::next_head() const {
  ByteWriter w;
  w.raw(prev_head);
  encode(w);
  return sha256(w.bytes());
}

void OfflineLogEntry::encode(ByteWriter& w) const {
  encode_body(w, *this);
  write_signature(w, entry_sig);
}

OfflineLogEntry OfflineLogEntry::decode(ByteReader& r) {
  OfflineLogEntry e;
  e.tx_id = r.fixed<32>();
  std::uint8_t role = r.u8();
  if (role < 1 || role > 4) fail(ErrorCode::DecodeError, "unknown log role");
  e.role = static_cast<LogRole>(role);
  std::uint8_t has_pub = r.u8();
  if (has_pub > 1) fail(ErrorCode::DecodeError, "bad presence flag");
  if (has_pub != 0) e.public_inputs = zkp::PublicInputs::decode(r);
  if (e.is_payment() != e.public_inputs.has_value()) {
    fail(ErrorCode::DecodeError, "payment entries carry public inputs, others do not");
  }
  e.amount = r.u64();
  e.bundle_hash = r.fixed<32>();
  e.prev_head = r.fixed<32>();
  e.entry_sig = read_signature(r);
  return e;
}

bool verify_log_chain(const std::vector<OfflineLogEntry>& entries, const Hash32& start_head,
                      const Hash32& end_head, const GroupElement& device_pk) {
  Hash32 head = start_head;
  for (const auto& e : entries) {
    if (e.prev_head != head) return false;
    if (!schnorr_verify(device_pk, e.signed_message(), e.entry_sig)) return false;
    head = e.next_head();
  }
  return head == end_head;
}

bool verify_log_chain(const std::vector<OfflineLogEntry>& entries, const Hash32& head,
                      const GroupElement& device_pk) {
  return verify_log_chain(entries, log_genesis(device_id_for(device_pk)), head, device_pk);
}

Bytes SyncAck::signed_message() const {
  ByteWriter w;
  w.raw("syncack/v1").raw(device_id).raw(head).u64(log_length).u64(epoch);
  return std::move(w).take();
}

void SyncAck::encode(ByteWriter& w) const {
  w.raw(device_id).raw(head).u64(log_length).u64(epoch);
  write_signature(w, fi_sig);
}

SyncAck SyncAck::decode(ByteReader& r) {
  SyncAck a;
  a.device_id = r.fixed<16>();
  a.head = r.fixed<32>();
  a.log_length = r.u64();
  a.epoch = r.u64();
  a.fi_sig = read_signature(r);
  return a;
}

SyncAck sign_sync_ack(const Scalar& fi_sk, const DeviceId& device, const Hash32& head,
                      std::uint64_t log_length, std::uint64_t epoch) {
  SyncAck a;
  a.device_id = device;
  a.head = head;
  a.log_length = log_length;
  a.epoch = epoch;
  a.fi_sig = schnorr_sign(fi_sk, a.signed_message());
  return a;
}

Bytes accept_message(const zkp::TxId& tx_id) {
  ByteWriter w;
  w.raw(tx_id).raw("accept");
  return std::move(w).take();
}

Bytes commit_message(const zkp::TxId& tx_id, const Hash32& accept_hash) {
  ByteWriter w;
  w.raw(tx_id).raw("commit").raw(accept_hash);
  return std::move(w).take();
}

Bytes VoidNotice::signed_message() const {
  ByteWriter w;
  w.raw("void/v1").raw(tx_id).raw(bundle_hash).raw(device_id);
  return std::move(w).take();
}

bool VoidNotice::verify(const GroupElement& device_pk) const {
  return device_id == device_id_for(device_pk) && schnorr_verify(device_pk, signed_message(), sig);
}

void VoidNotice::encode(ByteWriter& w) const {
  w.raw(tx_id).raw(bundle_hash).raw(device_id);
  write_signature(w, sig);
}

VoidNotice VoidNotice::decode(ByteReader& r) {
  VoidNotice v;
  v.tx_id = r.fixed<32>();
  v.bundle_hash = r.fixed<32>();
  v.device_id = r.fixed<16>();
  v.sig = read_signature(r);
  return v;
}

}  // namespace cbdc::se
