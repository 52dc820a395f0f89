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
#include <variant>
#include <vector>

#include "cbdc/protocol/messages.hpp"
#include "cbdc/se/secure_element.hpp"

namespace cbdc::protocol {

constexpr std::uint64_t kDefaultTimeoutTicks = 10;

enum class PaymentStatus { Completed, AbortedTimeout, AbortedReject, PendingSync };

std::string_view to_string(PaymentStatus status);

struct PaymentOutcome {
  PaymentStatus status = PaymentStatus::Completed;
  std::optional<zkp::TxId> tx_id;
  std::optional<zkp::RejectReason> reason;  // AbortedReject only

  bool operator==(const PaymentOutcome&) const = default;
};

enum class Side { Payer, Payee };

struct SideOutcome {
  Side side = Side::Payer;
  PaymentOutcome outcome;
};

// One IoT device: its secure element plus the payer and payee state
// machines of the offline exchange. Handles one message at a time.
class Device {
 public:
  Device(std::string name, se::SecureElement se, const crypto::GroupElement& fi_pk,
         std::uint64_t timeout_ticks = kDefaultTimeoutTicks);

  const std::string& name() const { return name_; }
  se::SecureElement& se() { return se_; }
  const se::SecureElement& se() const { return se_; }
  std::uint64_t timeout_ticks() const { return timeout_ticks_; }

  // SE errors propagate and nothing is emitted. On success the payer entry
  // is already in the log.
  PayInit payer_start(std::uint64_t amount, std::uint64_t epoch, std::uint64_t now_tick,
                      std::optional<se::DeviceId> payee_hint = std::nullopt);

  std::variant<PayAccept, zkp::RejectReason> payee_handle_init(const PayInit& init,
                                                              std::uint64_t now_epoch,
                                                              std::uint64_t now_tick);

  // UnknownTx or SignatureInvalid. A repeated accept returns the same commit.
  PayCommit payer_handle_accept(const PayAccept& accept);

  // UnknownTx or SignatureInvalid. A repeated commit returns the stored
  // receipt and touches nothing.
  Receipt payee_handle_commit(const PayCommit& commit);

  // Ends the in-flight session for tx_id on either side. Empty if there is
  // none.
  std::optional<SideOutcome> handle_timeout(const zkp::TxId& tx_id);

  // Times out every session whose deadline has passed.
  std::vector<SideOutcome> expire(std::uint64_t now_tick);

  bool idle() const { return payer_sessions_.empty() && payee_pending_.empty(); }

  // Sync material, keyed by bundle hash.
  const std::map<Hash32, zkp::ComplianceBundle>& bundles() const { return bundles_; }
  const std::map<Hash32, PayAccept>& accepts() const { return accepts_; }
  const std::map<Hash32, se::VoidNotice>& voids() const { return voids_; }
  const std::map<Hash32, Receipt>& receipts() const { return receipts_; }

 private:
  struct PayerSession {
    Hash32 bundle_hash{};
    std::uint64_t deadline = 0;
  };
  struct PayeePending {
    PayInit init;
    PayAccept accept;
    std::uint64_t deadline = 0;
  };
  struct Committed {
    Hash32 accept_hash{};
    PayCommit commit;
  };

  std::string name_;
  se::SecureElement se_;
  crypto::GroupElement fi_pk_;
  std::uint64_t timeout_ticks_;

  std::map<zkp::TxId, PayerSession> payer_sessions_;
  std::map<zkp::TxId, Committed> committed_;
  std::map<zkp::TxId, PayeePending> payee_pending_;
  std::map<zkp::TxId, Receipt> receipts_by_tx_;
  std::set<zkp::TxId> seen_tx_;

  std::map<Hash32, zkp::ComplianceBundle> bundles_;
  std::map<Hash32, PayAccept> accepts_;
  std::map<Hash32, se::VoidNotice> voids_;
  std::map<Hash32, Receipt> receipts_;
};

}  // namespace cbdc::protocol
