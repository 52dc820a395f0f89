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
#include <string>
#include <string_view>
#include <vector>

#include "cbdc/fi/audit.hpp"
#include "cbdc/fi/report.hpp"
#include "cbdc/ledger/ledger.hpp"
#include "cbdc/wallet/main_wallet.hpp"

namespace cbdc::fi {

struct CustomerRecord {
  wallet::OwnerId owner_id{};
  std::string identity;

  bool operator==(const CustomerRecord&) const = default;
};

struct SegmentAck {
  std::size_t payload_index = 0;
  std::size_t segment_index = 0;
  se::SyncAck ack;
};

struct ReconcileResult {
  ReconciliationReport report;
  std::vector<SegmentAck> acks;  // only segments whose chain verified
  std::map<wallet::OwnerId, std::uint64_t> wallet_credits;
};

enum class Settlement { Credited, Voided, Held };

// One settled transfer: a payer debit resolved to a payee credit, a void
// (payer recredit) or a hold.
struct TransferRecord {
  zkp::TxId tx_id{};
  zkp::Nullifier nullifier{};
  Hash32 bundle_hash{};
  se::DeviceId payer{};
  std::optional<se::DeviceId> payee;  // empty for a void
  std::uint64_t amount = 0;
  Settlement settlement = Settlement::Credited;
};

// Financial intermediary: KYC, certificates, issuance, reconciliation and
// audit. Owns the ledger.
class Intermediary {
 public:
  explicit Intermediary(const crypto::KeyPair& keys);

  const crypto::GroupElement& public_key() const { return keys_.pk; }
  void register_auditor(const crypto::GroupElement& auditor_pk) { auditor_pk_ = auditor_pk; }

  // Deterministic stub: empty when the document's "sanctioned" flag is set.
  // DecodeError unless the document is a JSON object with a string "name"
  // and an optional boolean "sanctioned".
  std::optional<CustomerRecord> onboard_customer(std::string_view kyc_doc);

  // UnknownCustomer, PolicyBound, DeviceFrozen (renewal of a frozen
  // device) or ProvisionMismatch (key registered to another owner).
  zkp::WalletCertificate issue_certificate(const wallet::OwnerId& owner,
                                           const crypto::GroupElement& subject_pk,
                                           const zkp::Limits& limits, std::uint64_t expiry_epoch);

  // UnknownCustomer or ValueInvalid.
  const ledger::LedgerEntry& issue_cbdc(wallet::MainWallet& wallet, std::uint64_t amount);

  ReconcileResult reconcile(const std::vector<wallet::SyncPayload>& payloads,
                            std::uint64_t now_epoch);

  // GrantInvalid or ScopeUnknown.
  std::vector<Disclosure> audit_disclose(const AuditGrant& grant) const;

  Pseudonym pseudonym(const se::DeviceId& device) const;
  bool is_frozen(const se::DeviceId& device) const;
  const std::set<se::DeviceId>& frozen_devices() const { return frozen_; }
  const ledger::Ledger& ledger() const { return ledger_; }
  const std::vector<TransferRecord>& transfers() const { return transfers_; }
  std::uint64_t settled_amount() const { return settled_amount_; }
  std::uint64_t held_amount() const { return held_amount_; }
  std::optional<CustomerRecord> customer(const wallet::OwnerId& owner) const;

 private:
  struct DeviceRecord {
    wallet::OwnerId owner{};
    crypto::GroupElement pk;
    Hash32 head{};
    std::uint64_t length = 0;
  };
  struct VerifiedPayment {
    zkp::TxId tx_id{};
    zkp::Nullifier nullifier{};
    Hash32 bundle_hash{};
    se::DeviceId payer{};
    std::uint64_t amount = 0;
    crypto::GroupElement commitment_delta;
  };
  struct Round;

  bool process_segment(Round& round, const wallet::DeviceSegment& seg);
  std::optional<std::string> check_payment(const se::OfflineLogEntry& e,
                                           const zkp::ComplianceBundle* bundle,
                                           std::uint64_t now_epoch);
  void settle(Round& round, const VerifiedPayment& p, const std::optional<se::DeviceId>& payee);
  void sweep_pending(Round& round);

  crypto::KeyPair keys_;
  Hash32 pseudonym_key_{};
  std::optional<crypto::GroupElement> auditor_pk_;
  ledger::Ledger ledger_;

  std::map<wallet::OwnerId, CustomerRecord> customers_;
  std::map<se::DeviceId, DeviceRecord> devices_;
  std::set<se::DeviceId> frozen_;

  std::map<Hash32, zkp::VerifyOutcome> verify_cache_;
  // Payer entries by bundle hash; each evidence item settles one transfer.
  std::map<Hash32, VerifiedPayment> payer_entries_;
  std::map<Hash32, std::set<se::DeviceId>> accept_evidence_;
  std::set<Hash32> void_evidence_;

  std::vector<TransferRecord> transfers_;
  std::set<std::pair<Hash32, std::optional<se::DeviceId>>> settled_keys_;
  std::map<zkp::Nullifier, std::vector<std::size_t>> by_nullifier_;
  std::uint64_t settled_amount_ = 0;
  std::uint64_t held_amount_ = 0;
};

}  // namespace cbdc::fi
