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

#include "cbdc/protocol/device.hpp"

#include "cbdc/common/error.hpp"

namespace cbdc::protocol {

std::string_view to_string(PaymentStatus status) {
  switch (status) {
    case PaymentStatus::Completed: return "Completed";
    case PaymentStatus::AbortedTimeout: return "AbortedTimeout";
    case PaymentStatus::AbortedReject: return "AbortedReject";
    case PaymentStatus::PendingSync: return "PendingSync";
  }
  return "Unknown";
}

Device::Device(std::string name, se::SecureElement se, const crypto::GroupElement& fi_pk,
               std::uint64_t timeout_ticks)
    : name_(std::move(name)), se_(std::move(se)), fi_pk_(fi_pk), timeout_ticks_(timeout_ticks) {}

PayInit Device::payer_start(std::uint64_t amount, std::uint64_t epoch, std::uint64_t now_tick,
                            std::optional<se::DeviceId> payee_hint) {
  se::PaymentAuthorization auth = se_.authorize_payment(amount, {payee_hint, epoch});
  PayInit init{auth.public_inputs, auth.public_inputs.tx_id, auth.bundle};
  bundles_[auth.entry.bundle_hash] = auth.bundle;
  payer_sessions_[init.tx_id] = {auth.entry.bundle_hash, now_tick + timeout_ticks_};
  return init;
}

std::variant<PayAccept, zkp::RejectReason> Device::payee_handle_init(const PayInit& init,
                                                                    std::uint64_t now_epoch,
                                                                    std::uint64_t now_tick) {
  if (seen_tx_.contains(init.tx_id)) return zkp::RejectReason::DuplicateTx;
  if (init.tx_id != init.m.tx_id) return zkp::RejectReason::TxIdMismatch;
  zkp::VerifyOutcome v = zkp::verify_compliance_bundle(init.bundle, init.m, fi_pk_, now_epoch);
  if (!v.accepted()) return *v.reason;

  PayAccept accept{init.tx_id, se_.certificate(), se_.sign_accept(init.tx_id)};
  seen_tx_.insert(init.tx_id);
  payee_pending_[init.tx_id] = {init, accept, now_tick + timeout_ticks_};
  return accept;
}

PayCommit Device::payer_handle_accept(const PayAccept& accept) {
  auto session = payer_sessions_.find(accept.tx_id);
  if (session == payer_sessions_.end()) {
    auto done = committed_.find(accept.tx_id);
    if (done != committed_.end() && done->second.accept_hash == accept.hash()) {
      return done->second.commit;
    }
    fail(ErrorCode::UnknownTx, "accept for a payment not in flight");
  }
  if (!accept.verify(fi_pk_)) fail(ErrorCode::SignatureInvalid, "payee accept");

  Hash32 accept_hash = accept.hash();
  PayCommit commit{accept.tx_id, se_.sign_commit(accept.tx_id, accept_hash)};
  accepts_[session->second.bundle_hash] = accept;
  committed_[accept.tx_id] = {accept_hash, commit};
  payer_sessions_.erase(session);
  return commit;
}

Receipt Device::payee_handle_commit(const PayCommit& commit) {
  auto pending = payee_pending_.find(commit.tx_id);
  if (pending == payee_pending_.end()) {
    auto done = receipts_by_tx_.find(commit.tx_id);
    if (done != receipts_by_tx_.end() && done->second.commit == commit) return done->second;
    fail(ErrorCode::UnknownTx, "commit without a pending accept");
  }
  const PayInit& init = pending->second.init;
  if (!commit.verify(init.m.certificate.subject_pk, pending->second.accept)) {
    fail(ErrorCode::SignatureInvalid, "payer commit");
  }

  Hash32 bundle_hash = init.bundle.hash();
  se::OfflineLogEntry entry;
  entry.tx_id = init.tx_id;
  entry.role = se::LogRole::Payee;
  entry.public_inputs = init.m;
  entry.bundle_hash = bundle_hash;
  entry.prev_head = se_.log_head();
  se_.record_incoming(std::move(entry));

  Receipt receipt{bundle_hash, pending->second.accept, commit};
  bundles_[bundle_hash] = init.bundle;
  receipts_[bundle_hash] = receipt;
  receipts_by_tx_[commit.tx_id] = receipt;
  payee_pending_.erase(pending);
  return receipt;
}

std::optional<SideOutcome> Device::handle_timeout(const zkp::TxId& tx_id) {
  if (auto it = payer_sessions_.find(tx_id); it != payer_sessions_.end()) {
    // Funds stay debited; the notice lets reconciliation recredit them.
    se::VoidNotice notice = se_.void_payment(tx_id);
    voids_[notice.bundle_hash] = notice;
    payer_sessions_.erase(it);
    return SideOutcome{Side::Payer, {PaymentStatus::PendingSync, tx_id, std::nullopt}};
  }
  if (auto it = payee_pending_.find(tx_id); it != payee_pending_.end()) {
    payee_pending_.erase(it);
    return SideOutcome{Side::Payee, {PaymentStatus::AbortedTimeout, tx_id, std::nullopt}};
  }
  return std::nullopt;
}

std::vector<SideOutcome> Device::expire(std::uint64_t now_tick) {
  std::vector<zkp::TxId> due;
  for (const auto& [tx, s] : payer_sessions_) {
    if (now_tick >= s.deadline) due.push_back(tx);
  }
  for (const auto& [tx, p] : payee_pending_) {
    if (now_tick >= p.deadline) due.push_back(tx);
  }
  std::vector<SideOutcome> out;
  for (const auto& tx : due) {
    while (auto o = handle_timeout(tx)) out.push_back(*o);
  }
  return out;
}

}  // namespace cbdc::protocol
