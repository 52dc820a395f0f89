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
#include <vector>

#include "cbdc/se/types.hpp"

namespace cbdc::se {

struct PaymentContext {
  std::optional<DeviceId> payee_hint;
  std::uint64_t epoch = 0;
};

struct PaymentAuthorization {
  zkp::ComplianceBundle bundle;
  zkp::PublicInputs public_inputs;
  OfflineLogEntry entry;
  std::optional<DeviceId> payee_hint;
};

struct ReclaimResult {
  std::uint64_t amount = 0;
  std::optional<OfflineLogEntry> entry;  // empty when nothing was reclaimed
};

// Plaintext view for the simulator's conservation oracle. Never sent
// anywhere.
struct SeInspection {
  std::uint64_t balance = 0;
  std::uint64_t cum_spent = 0;
  std::uint64_t counter = 0;
  std::uint64_t counter_base = 0;
};

// Emulated secure element. Openings and keys stay inside; the public
// surface returns commitments, proofs and signed log entries.
class SecureElement {
 public:
  // ProvisionMismatch if cert does not bind keys.pk; PolicyBound if a
  // limit does not fit the proof width.
  static SecureElement provision(const zkp::WalletCertificate& cert, const crypto::KeyPair& keys,
                                 const Hash32& prf_seed, const Policy& policy,
                                 const crypto::GroupElement& owner_pk,
                                 const crypto::GroupElement& fi_pk);

  // AllocationInvalid on a bad signature, wrong device or replayed nonce;
  // ExceedsDeviceLimit if the balance would reach 2^32.
  OfflineLogEntry load_value(const AllocationRecord& allocation);

  // Debits, advances the counter and appends the payer log entry before the
  // bundle is returned.
  PaymentAuthorization authorize_payment(std::uint64_t amount, const PaymentContext& ctx);

  // Appends a payee entry. Spendable balance is unchanged.
  OfflineLogEntry record_incoming(OfflineLogEntry entry);

  // Moves the whole spendable balance out (online only).
  ReclaimResult reclaim();

  // Resets the counter budget and cumulative spend. Returns false if the
  // ack is not for this device and head or its signature fails.
  bool apply_sync_ack(const SyncAck& ack);

  // Payee signature over tx_id || "accept".
  crypto::Signature sign_accept(const zkp::TxId& tx_id) const;

  // Payer signature over tx_id || "commit" || accept_hash. Requires a payer
  // entry for tx_id; TxVoided after void_payment, TxCommitted if a different
  // accept was already committed. Repeating the same commit is allowed.
  crypto::Signature sign_commit(const zkp::TxId& tx_id, const Hash32& accept_hash);

  // Gives up on an uncommitted payment. After this the SE refuses to commit
  // it. UnknownTx without a payer entry; TxCommitted once committed.
  VoidNotice void_payment(const zkp::TxId& tx_id);

  // Replaces the certificate (renewal). Same subject key required.
  void install_certificate(const zkp::WalletCertificate& cert);

  const DeviceId& device_id() const { return s_.device_id; }
  const crypto::GroupElement& public_key() const { return s_.keys.pk; }
  const zkp::WalletCertificate& certificate() const { return s_.cert; }
  const Policy& policy() const { return s_.policy; }
  std::uint64_t counter() const { return s_.counter; }
  const Hash32& log_head() const { return s_.log_head; }
  const std::vector<OfflineLogEntry>& log() const { return s_.log; }
  crypto::GroupElement balance_commitment() const;
  crypto::GroupElement cum_commitment() const;
  // Signature over state_message(balance_commitment, cum_commitment).
  crypto::Signature state_signature() const;

  SeInspection inspect() const;

 private:
  friend class RollbackHarness;

  struct Outgoing {
    Hash32 bundle_hash{};
    std::optional<Hash32> committed_accept;
    bool voided = false;
  };

  struct State {
    crypto::KeyPair keys;
    Hash32 prf_seed{};
    DeviceId device_id{};
    zkp::WalletCertificate cert;
    Policy policy;
    crypto::GroupElement owner_pk;
    crypto::GroupElement fi_pk;
    std::uint64_t counter = 0;
    std::uint64_t counter_base = 0;
    std::uint64_t balance = 0;
    crypto::Scalar r_balance;
    std::uint64_t cum_spent = 0;
    crypto::Scalar r_cum;
    std::uint64_t blinding_epoch = 0;
    Hash32 log_head{};
    std::vector<OfflineLogEntry> log;
    std::set<Nonce> used_nonces;
    std::map<zkp::TxId, Outgoing> outgoing;
  };

  explicit SecureElement(State s) : s_(std::move(s)) {}
  void rerandomize();
  OfflineLogEntry append(OfflineLogEntry entry);

  State s_;
};

}  // namespace cbdc::se
