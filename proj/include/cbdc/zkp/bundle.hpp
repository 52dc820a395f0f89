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
#include <optional>
#include <string_view>

#include "cbdc/common/bytes.hpp"
#include "cbdc/crypto/pedersen.hpp"
#include "cbdc/crypto/schnorr.hpp"
#include "cbdc/zkp/certificate.hpp"
#include "cbdc/zkp/nullifier.hpp"
#include "cbdc/zkp/proofs.hpp"

namespace cbdc::zkp {

// Width of the balance and headroom range proofs.
constexpr unsigned kAmountBits = 32;
constexpr std::uint64_t kAmountBound = std::uint64_t{1} << kAmountBits;

// Public statement of one offline payment (the transaction metadata M).
struct PublicInputs {
  GroupElement c_balance_before;
  GroupElement c_cum_before;
  std::uint64_t amount = 0;      // v
  std::uint64_t limit = 0;       // L
  std::uint64_t per_tx_cap = 0;  // T
  WalletCertificate certificate;
  TxId tx_id{};
  std::uint64_t epoch = 0;

  void encode(ByteWriter& w) const;
  static PublicInputs decode(ByteReader& r);
  bool operator==(const PublicInputs&) const = default;
};

struct ComplianceBundle {
  GroupElement c_balance_after;
  GroupElement c_cum_after;
  RangeProof range_balance;
  RangeProof range_headroom;
  OwnershipProof ownership;
  crypto::Signature prev_state_sig;
  crypto::Signature transition_sig;
  Nullifier nullifier{};

  void encode(ByteWriter& w) const;
  static ComplianceBundle decode(ByteReader& r);
  // SHA-256 over "bundle/v1" and the canonical encoding.
  Hash32 hash() const;
  std::size_t proof_bytes() const {
    return range_balance.size_bytes() + range_headroom.size_bytes() + OwnershipProof::kEncodedSize;
  }
  bool operator==(const ComplianceBundle&) const = default;
};

// Openings held inside the secure element. The counter has already been
// advanced for the payment being proven.
struct ProverView {
  crypto::KeyPair keys;
  Hash32 prf_seed{};
  std::uint64_t counter = 0;
  std::uint64_t balance = 0;
  Scalar r_balance;
  std::uint64_t cum_spent = 0;
  Scalar r_cum;
};

// Messages the device key signs over its committed state.
Bytes state_message(const GroupElement& c_balance, const GroupElement& c_cum);
Bytes transition_message(const PublicInputs& pub, const ComplianceBundle& bundle);

ComplianceBundle build_compliance_bundle(const ProverView& view, const PublicInputs& pub,
                                         const PedersenParams& params = crypto::default_params());

enum class RejectReason {
  CertificateInvalid,
  CredentialExpired,
  PolicyMismatch,
  ValueInvalid,
  TxIdMismatch,
  SignatureInvalid,
  ProofInvalid,
  OwnershipInvalid,
  DuplicateTx,
};

std::string_view to_string(RejectReason reason);

struct VerifyOutcome {
  std::optional<RejectReason> reason;  // empty on Accept

  static VerifyOutcome accept() { return {}; }
  static VerifyOutcome reject(RejectReason r) { return {r}; }
  bool accepted() const { return !reason.has_value(); }
};

VerifyOutcome verify_compliance_bundle(const ComplianceBundle& bundle, const PublicInputs& pub,
                                       const GroupElement& fi_pub, std::uint64_t now_epoch,
                                       const PedersenParams& params = crypto::default_params());

}  // namespace cbdc::zkp
