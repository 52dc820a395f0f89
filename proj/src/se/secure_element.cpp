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

#include "cbdc/se/secure_element.hpp"

#include "cbdc/common/error.hpp"
#include "cbdc/crypto/hash.hpp"

namespace cbdc::se {

using namespace crypto;

namespace {

void check_policy_bounds(const zkp::Limits& l) {
  if (l.cum_limit >= zkp::kAmountBound || l.per_tx_cap >= zkp::kAmountBound ||
      l.max_tx >= zkp::kAmountBound) {
    fail(ErrorCode::PolicyBound, "policy limits must be below 2^32");
  }
}

}  // namespace

SecureElement SecureElement::provision(const zkp::WalletCertificate& cert, const KeyPair& keys,
                                       const Hash32& prf_seed, const Policy& policy,
                                       const GroupElement& owner_pk, const GroupElement& fi_pk) {
  if (cert.subject_pk != keys.pk || keys.pk != base_table().mul(keys.sk)) {
    fail(ErrorCode::ProvisionMismatch, "certificate does not bind the device key");
  }
  if (!(cert.limits == policy.limits) || cert.expiry_epoch != policy.expiry_epoch) {
    fail(ErrorCode::ProvisionMismatch, "policy differs from the certificate");
  }
  check_policy_bounds(policy.limits);

  State s;
  s.keys = keys;
  s.prf_seed = prf_seed;
  s.device_id = device_id_for(keys.pk);
  s.cert = cert;
  s.policy = policy;
  s.owner_pk = owner_pk;
  s.fi_pk = fi_pk;
  s.log_head = log_genesis(s.device_id);
  SecureElement se(std::move(s));
  se.rerandomize();
  return se;
}

void SecureElement::rerandomize() {
  ByteWriter w;
  w.raw(s_.prf_seed).u64(s_.blinding_epoch++);
  s_.r_balance = hash_to_scalar({as_bytes("blind/bal/v1"), w.bytes()});
  s_.r_cum = hash_to_scalar({as_bytes("blind/cum/v1"), w.bytes()});
}

OfflineLogEntry SecureElement::append(OfflineLogEntry entry) {
  entry.prev_head = s_.log_head;
  entry.entry_sig = schnorr_sign(s_.keys.sk, entry.signed_message());
  s_.log_head = entry.next_head();
  s_.log.push_back(entry);
  return entry;
}

OfflineLogEntry SecureElement::load_value(const AllocationRecord& allocation) {
  if (allocation.device_id != s_.device_id || allocation.amount == 0 ||
      !schnorr_verify(s_.owner_pk, allocation.signed_message(), allocation.sig)) {
    fail(ErrorCode::AllocationInvalid, "allocation not signed by the owning wallet");
  }
  if (s_.used_nonces.contains(allocation.nonce)) {
    fail(ErrorCode::AllocationInvalid, "allocation nonce already used");
  }
  if (allocation.amount >= zkp::kAmountBound - s_.balance) {
    fail(ErrorCode::ExceedsDeviceLimit, "balance would reach 2^32");
  }
  s_.used_nonces.insert(allocation.nonce);
  s_.balance += allocation.amount;
  rerandomize();

  OfflineLogEntry e;
  e.tx_id = allocation.id();
  e.role = LogRole::Load;
  e.amount = allocation.amount;
  return append(std::move(e));
}

PaymentAuthorization SecureElement::authorize_payment(std::uint64_t amount,
                                                      const PaymentContext& ctx) {
  const zkp::Limits& lim = s_.policy.limits;
  if (amount == 0 || amount > lim.per_tx_cap) {
    fail(ErrorCode::ValueInvalid, "amount " + std::to_string(amount) + " outside [1, T]");
  }
  if (amount > s_.balance) fail(ErrorCode::InsufficientFunds);
  if (s_.cum_spent + amount > lim.cum_limit) fail(ErrorCode::LimitExceeded);
  if (s_.counter - s_.counter_base >= lim.max_tx) fail(ErrorCode::CounterExhausted);
  if (ctx.epoch > s_.policy.expiry_epoch) fail(ErrorCode::CredentialExpired);

  // The counter moves first; nothing below can hand out a second bundle for
  // the same value of it.
  s_.counter += 1;

  const auto& params = default_params();
  zkp::ProverView view{s_.keys,     s_.prf_seed, s_.counter, s_.balance,
                       s_.r_balance, s_.cum_spent, s_.r_cum};
  zkp::PublicInputs pub;
  pub.c_balance_before = params.commit(s_.balance, s_.r_balance);
  pub.c_cum_before = params.commit(s_.cum_spent, s_.r_cum);
  pub.amount = amount;
  pub.limit = lim.cum_limit;
  pub.per_tx_cap = lim.per_tx_cap;
  pub.certificate = s_.cert;
  pub.tx_id = zkp::derive_tx_id(zkp::derive_nullifier(s_.prf_seed, s_.counter));
  pub.epoch = ctx.epoch;

  PaymentAuthorization out;
  out.bundle = zkp::build_compliance_bundle(view, pub, params);
  out.public_inputs = pub;
  out.payee_hint = ctx.payee_hint;

  s_.balance -= amount;
  s_.cum_spent += amount;

  OfflineLogEntry e;
  e.tx_id = pub.tx_id;
  e.role = LogRole::Payer;
  e.public_inputs = pub;
  e.bundle_hash = out.bundle.hash();
  out.entry = append(std::move(e));
  s_.outgoing[pub.tx_id] = Outgoing{out.entry.bundle_hash, std::nullopt, false};
  return out;
}

OfflineLogEntry SecureElement::record_incoming(OfflineLogEntry entry) {
  if (entry.role != LogRole::Payee || !entry.public_inputs) {
    fail(ErrorCode::LogCorrupt, "incoming record must be a payee payment entry");
  }
  if (entry.prev_head != s_.log_head) fail(ErrorCode::LogCorrupt, "prev_head does not match");
  return append(std::move(entry));
}

ReclaimResult SecureElement::reclaim() {
  ReclaimResult r;
  r.amount = s_.balance;
  if (r.amount == 0) return r;
  s_.balance = 0;
  rerandomize();

  ByteWriter w;
  w.raw("reclaim/v1").raw(s_.device_id).u64(s_.log.size());
  OfflineLogEntry e;
  e.tx_id = sha256(w.bytes());
  e.role = LogRole::Reclaim;
  e.amount = r.amount;
  r.entry = append(std::move(e));
  return r;
}

bool SecureElement::apply_sync_ack(const SyncAck& ack) {
  if (ack.device_id != s_.device_id || ack.head != s_.log_head ||
      ack.log_length != s_.log.size() ||
      !schnorr_verify(s_.fi_pk, ack.signed_message(), ack.fi_sig)) {
    return false;
  }
  s_.counter_base = s_.counter;
  s_.cum_spent = 0;
  rerandomize();
  return true;
}

Signature SecureElement::sign_accept(const zkp::TxId& tx_id) const {
  return schnorr_sign(s_.keys.sk, accept_message(tx_id));
}

Signature SecureElement::sign_commit(const zkp::TxId& tx_id, const Hash32& accept_hash) {
  auto it = s_.outgoing.find(tx_id);
  if (it == s_.outgoing.end()) fail(ErrorCode::UnknownTx, "no payer entry for tx");
  Outgoing& out = it->second;
  if (out.voided) fail(ErrorCode::TxVoided);
  if (out.committed_accept && *out.committed_accept != accept_hash) {
    fail(ErrorCode::TxCommitted, "committed to a different accept");
  }
  out.committed_accept = accept_hash;
  return schnorr_sign(s_.keys.sk, commit_message(tx_id, accept_hash));
}

VoidNotice SecureElement::void_payment(const zkp::TxId& tx_id) {
  auto it = s_.outgoing.find(tx_id);
  if (it == s_.outgoing.end()) fail(ErrorCode::UnknownTx, "no payer entry for tx");
  Outgoing& out = it->second;
  if (out.committed_accept) fail(ErrorCode::TxCommitted);
  out.voided = true;
  VoidNotice v;
  v.tx_id = tx_id;
  v.bundle_hash = out.bundle_hash;
  v.device_id = s_.device_id;
  v.sig = schnorr_sign(s_.keys.sk, v.signed_message());
  return v;
}

void SecureElement::install_certificate(const zkp::WalletCertificate& cert) {
  if (cert.subject_pk != s_.keys.pk) fail(ErrorCode::ProvisionMismatch);
  if (!cert.verify(s_.fi_pk)) fail(ErrorCode::SignatureInvalid, "certificate not FI-signed");
  check_policy_bounds(cert.limits);
  s_.cert = cert;
  s_.policy = {cert.limits, cert.expiry_epoch};
}

GroupElement SecureElement::balance_commitment() const {
  return default_params().commit(s_.balance, s_.r_balance);
}

GroupElement SecureElement::cum_commitment() const {
  return default_params().commit(s_.cum_spent, s_.r_cum);
}

Signature SecureElement::state_signature() const {
  return schnorr_sign(s_.keys.sk, zkp::state_message(balance_commitment(), cum_commitment()));
}

SeInspection SecureElement::inspect() const {
  return {s_.balance, s_.cum_spent, s_.counter, s_.counter_base};
}

}  // namespace cbdc::se
