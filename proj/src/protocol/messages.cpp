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

#include "cbdc/protocol/messages.hpp"

#include "cbdc/channel/frame.hpp"
#include "cbdc/common/error.hpp"
#include "cbdc/crypto/codec.hpp"
#include "cbdc/crypto/hash.hpp"
#include "cbdc/se/types.hpp"

namespace cbdc::protocol {

using namespace crypto;

void PayInit::encode(ByteWriter& w) const {
  w.raw(tx_id);
  m.encode(w);
  bundle.encode(w);
}

PayInit PayInit::decode(ByteReader& r) {
  PayInit p;
  p.tx_id = r.fixed<32>();
  p.m = zkp::PublicInputs::decode(r);
  p.bundle = zkp::ComplianceBundle::decode(r);
  return p;
}

bool PayAccept::verify(const GroupElement& fi_pk) const {
  return payee_cert.verify(fi_pk) &&
         schnorr_verify(payee_cert.subject_pk, se::accept_message(tx_id), payee_sig);
}

Hash32 PayAccept::hash() const { return sha256(encode_to_bytes(*this)); }

void PayAccept::encode(ByteWriter& w) const {
  w.raw(tx_id);
  payee_cert.encode(w);
  write_signature(w, payee_sig);
}

PayAccept PayAccept::decode(ByteReader& r) {
  PayAccept a;
  a.tx_id = r.fixed<32>();
  a.payee_cert = zkp::WalletCertificate::decode(r);
  a.payee_sig = read_signature(r);
  return a;
}

bool PayCommit::verify(const GroupElement& payer_pk, const PayAccept& accept) const {
  return accept.tx_id == tx_id &&
         schnorr_verify(payer_pk, se::commit_message(tx_id, accept.hash()), payer_sig);
}

void PayCommit::encode(ByteWriter& w) const {
  w.raw(tx_id);
  write_signature(w, payer_sig);
}

PayCommit PayCommit::decode(ByteReader& r) {
  PayCommit c;
  c.tx_id = r.fixed<32>();
  c.payer_sig = read_signature(r);
  return c;
}

void Receipt::encode(ByteWriter& w) const {
  w.raw(bundle_hash);
  accept.encode(w);
  commit.encode(w);
}

Receipt Receipt::decode(ByteReader& r) {
  Receipt rc;
  rc.bundle_hash = r.fixed<32>();
  rc.accept = PayAccept::decode(r);
  rc.commit = PayCommit::decode(r);
  return rc;
}

MsgType type_of(const Message& msg) {
  return static_cast<MsgType>(msg.index() + 1);
}

Bytes encode_message(const Message& msg) {
  Bytes payload = std::visit([](const auto& m) { return encode_to_bytes(m); }, msg);
  return channel::encode_frame(static_cast<std::uint8_t>(type_of(msg)), payload);
}

Message decode_message(ByteView frame_bytes) {
  channel::Frame f = channel::decode_frame(frame_bytes);
  switch (static_cast<MsgType>(f.msg_type)) {
    case MsgType::PayInit: return decode_from_bytes<PayInit>(f.payload);
    case MsgType::PayAccept: return decode_from_bytes<PayAccept>(f.payload);
    case MsgType::PayCommit: return decode_from_bytes<PayCommit>(f.payload);
  }
  fail(ErrorCode::DecodeError, "unknown message type " + std::to_string(f.msg_type));
}

}  // namespace cbdc::protocol
