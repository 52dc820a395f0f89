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
#include <variant>

#include "cbdc/common/bytes.hpp"
#include "cbdc/crypto/schnorr.hpp"
#include "cbdc/zkp/bundle.hpp"

namespace cbdc::protocol {

enum class MsgType : std::uint8_t { PayInit = 0x01, PayAccept = 0x02, PayCommit = 0x03 };

struct PayInit {
  zkp::PublicInputs m;
  zkp::TxId tx_id{};
  zkp::ComplianceBundle bundle;

  void encode(ByteWriter& w) const;
  static PayInit decode(ByteReader& r);
  bool operator==(const PayInit&) const = default;
};

struct PayAccept {
  zkp::TxId tx_id{};
  zkp::WalletCertificate payee_cert;
  crypto::Signature payee_sig;  // over tx_id || "accept"

  // Certificate under fi_pk and signature under the certified key.
  bool verify(const crypto::GroupElement& fi_pk) const;
  // SHA-256 of the canonical encoding; bound by the commit.
  Hash32 hash() const;
  void encode(ByteWriter& w) const;
  static PayAccept decode(ByteReader& r);
  bool operator==(const PayAccept&) const = default;
};

struct PayCommit {
  zkp::TxId tx_id{};
  crypto::Signature payer_sig;  // over tx_id || "commit" || hash(accept)

  bool verify(const crypto::GroupElement& payer_pk, const PayAccept& accept) const;
  void encode(ByteWriter& w) const;
  static PayCommit decode(ByteReader& r);
  bool operator==(const PayCommit&) const = default;
};

// What the payee keeps after a completed exchange and uploads at sync.
struct Receipt {
  Hash32 bundle_hash{};
  PayAccept accept;
  PayCommit commit;

  void encode(ByteWriter& w) const;
  static Receipt decode(ByteReader& r);
  bool operator==(const Receipt&) const = default;
};

using Message = std::variant<PayInit, PayAccept, PayCommit>;

MsgType type_of(const Message& msg);

// Full channel frame for the message.
Bytes encode_message(const Message& msg);

// Frame errors from the channel layer; DecodeError for an unknown type or a
// malformed payload.
Message decode_message(ByteView frame_bytes);

}  // namespace cbdc::protocol
