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

#include "cbdc/fi/audit.hpp"

#include "cbdc/common/error.hpp"
#include "cbdc/crypto/codec.hpp"

namespace cbdc::fi {

std::string_view to_string(ScopeKind kind) {
  switch (kind) {
    case ScopeKind::TxId: return "tx_id";
    case ScopeKind::Nullifier: return "nullifier";
    case ScopeKind::DevicePseudonym: return "device";
  }
  return "unknown";
}

Bytes AuditGrant::signed_message() const {
  ByteWriter w;
  w.raw("audit-grant/v1").u8(static_cast<std::uint8_t>(scope.kind)).var(scope.value);
  return std::move(w).take();
}

void AuditGrant::encode(ByteWriter& w) const {
  w.u8(static_cast<std::uint8_t>(scope.kind)).var(scope.value);
  crypto::write_signature(w, grant_sig);
}

AuditGrant AuditGrant::decode(ByteReader& r) {
  AuditGrant g;
  std::uint8_t kind = r.u8();
  if (kind < 1 || kind > 3) fail(ErrorCode::DecodeError, "unknown audit scope");
  g.scope.kind = static_cast<ScopeKind>(kind);
  g.scope.value = r.var();
  g.grant_sig = crypto::read_signature(r);
  return g;
}

AuditGrant sign_audit_grant(const crypto::Scalar& auditor_sk, const AuditScope& scope) {
  AuditGrant g{scope, {}};
  g.grant_sig = crypto::schnorr_sign(auditor_sk, g.signed_message());
  return g;
}

}  // namespace cbdc::fi
