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
#include <string>
#include <string_view>

#include "cbdc/common/bytes.hpp"
#include "cbdc/crypto/schnorr.hpp"

namespace cbdc::fi {

enum class ScopeKind : std::uint8_t { TxId = 1, Nullifier = 2, DevicePseudonym = 3 };

std::string_view to_string(ScopeKind kind);

struct AuditScope {
  ScopeKind kind = ScopeKind::TxId;
  Bytes value;  // 32-byte tx_id or nullifier, or a 16-byte pseudonym

  bool operator==(const AuditScope&) const = default;
};

// Stand-in for a court or regulator order, signed by the auditor key.
struct AuditGrant {
  AuditScope scope;
  crypto::Signature grant_sig;

  // "audit-grant/v1" || kind || var(value)
  Bytes signed_message() const;
  void encode(ByteWriter& w) const;
  static AuditGrant decode(ByteReader& r);
};

AuditGrant sign_audit_grant(const crypto::Scalar& auditor_sk, const AuditScope& scope);

struct Disclosure {
  Hash32 tx_id{};
  std::string owner_identity;  // payer's KYC identity
  std::uint64_t amount = 0;
  std::string counterparty;  // payee pseudonym (hex), or "void"

  bool operator==(const Disclosure&) const = default;
};

}  // namespace cbdc::fi
