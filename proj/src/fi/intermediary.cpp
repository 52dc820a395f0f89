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

#include "cbdc/fi/intermediary.hpp"

#include <sodium.h>

#include <algorithm>

#include "cbdc/common/error.hpp"
#include "cbdc/crypto/hash.hpp"

namespace cbdc::fi {

using namespace crypto;

struct Intermediary::Round {
  std::uint64_t now_epoch = 0;
  ReconcileResult result;
  std::vector<zkp::Nullifier> flagged;
};

Intermediary::Intermediary(const KeyPair& keys) : keys_(keys) {
  ensure_sodium();
  auto sk = keys.sk.to_bytes();
  pseudonym_key_ = Sha256().update("fi-pseudonym-key/v1").update(sk).finish();
}

Pseudonym Intermediary::pseudonym(const se::DeviceId& device) const {
  ByteWriter w;
  w.raw("pseudonym/v1").raw(device);
  std::array<std::uint8_t, crypto_auth_hmacsha256_BYTES> mac{};
  crypto_auth_hmacsha256(mac.data(), w.bytes().data(), w.bytes().size(), pseudonym_key_.data());
  Pseudonym out{};
  std::copy_n(mac.begin(), out.size(), out.begin());
  return out;
}

bool Intermediary::is_frozen(const se::DeviceId& device) const { return frozen_.contains(device); }

std::optional<CustomerRecord> Intermediary::customer(const wallet::OwnerId& owner) const {
  auto it = customers_.find(owner);
  if (it == customers_.end()) return std::nullopt;
  return it->second;
}

std::optional<CustomerRecord> Intermediary::onboard_customer(std::string_view kyc_doc) {
  nlohmann::json doc = nlohmann::json::parse(kyc_doc, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) fail(ErrorCode::DecodeError, "KYC document is not a JSON object");
  auto name = doc.find("name");
  if (name == doc.end() || !name->is_string() || name->get<std::string>().empty()) {
    fail(ErrorCode::DecodeError, "KYC document needs a non-empty string \"name\"");
  }
  bool sanctioned = false;
  if (auto s = doc.find("sanctioned"); s != doc.end()) {
    if (!s->is_boolean()) fail(ErrorCode::DecodeError, "\"sanctioned\" must be a boolean");
    sanctioned = s->get<bool>();
  }
  if (sanctioned) return std::nullopt;

  CustomerRecord rec;
  rec.identity = name->get<std::string>();
  Hash32 h = Sha256().update("owner/v1").update(rec.identity).finish();
  std::copy_n(h.begin(), rec.owner_id.size(), rec.owner_id.begin());
  customers_[rec.owner_id] = rec;
  return rec;
}

zkp::WalletCertificate Intermediary::issue_certificate(const wallet::OwnerId& owner,
                                                       const GroupElement& subject_pk,
                                                       const zkp::Limits& limits,
                                                       std::uint64_t expiry_epoch) {
  if (!customers_.contains(owner)) fail(ErrorCode::UnknownCustomer);
  if (limits.cum_limit >= zkp::kAmountBound || limits.per_tx_cap >= zkp::kAmountBound ||
      limits.max_tx >= zkp::kAmountBound) {
    fail(ErrorCode::PolicyBound, "limits must be below 2^32");
  }
  se::DeviceId id = se::device_id_for(subject_pk);
  if (auto it = devices_.find(id); it != devices_.end()) {
    if (it->second.owner != owner) fail(ErrorCode::ProvisionMismatch, "key registered to another owner");
    if (is_frozen(id)) fail(ErrorCode::DeviceFrozen);
  } else {
    devices_[id] = {owner, subject_pk, se::log_genesis(id), 0};
  }
  return zkp::sign_certificate(keys_.sk, subject_pk, limits, expiry_epoch);
}

const ledger::LedgerEntry& Intermediary::issue_cbdc(wallet::MainWallet& wallet,
                                                    std::uint64_t amount) {
  if (!customers_.contains(wallet.owner_id())) fail(ErrorCode::UnknownCustomer);
  if (amount == 0) fail(ErrorCode::ValueInvalid, "issuance of zero");
  se::DeviceId owner_key{};
  std::copy(wallet.owner_id().begin(), wallet.owner_id().end(), owner_key.begin());
  ByteWriter w;
  w.raw("issuance/v1").raw(pseudonym(owner_key)).u64(amount).u64(ledger_.size());
  const auto& entry = ledger_.append(ledger::EntryKind::Issuance, sha256(w.bytes()),
                                     static_cast<std::int64_t>(amount));
  wallet.credit(amount);
  return entry;
}

std::optional<std::string> Intermediary::check_payment(const se::OfflineLogEntry& e,
                                                       const zkp::ComplianceBundle* bundle,
                                                       std::uint64_t now_epoch) {
  if (bundle == nullptr) return "MissingBundle";
  const zkp::PublicInputs& pub = *e.public_inputs;
  if (pub.tx_id != e.tx_id) return "TxIdMismatch";
  if (pub.epoch > now_epoch) return "EpochInFuture";
  if (!devices_.contains(se::device_id_for(pub.certificate.subject_pk))) return "UnknownDevice";

  ByteWriter w;
  w.raw("verify/v1").raw(e.bundle_hash);
  pub.encode(w);
  Hash32 key = sha256(w.bytes());
  auto cached = verify_cache_.find(key);
  if (cached == verify_cache_.end()) {
    // Credentials are judged at the epoch the payment was made.
    cached = verify_cache_.emplace(key, zkp::verify_compliance_bundle(*bundle, pub, keys_.pk, pub.epoch)).first;
  }
  if (!cached->second.accepted()) return std::string(zkp::to_string(*cached->second.reason));
  return std::nullopt;
}

void Intermediary::settle(Round& round, const VerifiedPayment& p,
                          const std::optional<se::DeviceId>& payee) {
  if (!settled_keys_.insert({p.bundle_hash, payee}).second) return;

  ReconciliationReport& rep = round.result.report;
  TransferRecord t{p.tx_id, p.nullifier, p.bundle_hash, p.payer, payee, p.amount, Settlement::Credited};
  auto& uses = by_nullifier_[p.nullifier];

  std::string hold_reason;
  if (!uses.empty()) {
    hold_reason = "DoubleSpend";
    frozen_.insert(p.payer);
    if (std::find(round.flagged.begin(), round.flagged.end(), p.nullifier) == round.flagged.end()) {
      round.flagged.push_back(p.nullifier);
    }
  } else if (is_frozen(p.payer)) {
    hold_reason = "PayerFrozen";
  } else if (payee && is_frozen(*payee)) {
    hold_reason = "PayeeFrozen";
  }

  if (!hold_reason.empty()) {
    t.settlement = Settlement::Held;
    held_amount_ += p.amount;
    rep.held.push_back({p.tx_id, hold_reason});
  } else if (payee) {
    rep.credits.push_back({pseudonym(*payee), p.amount, p.tx_id});
    round.result.wallet_credits[devices_.at(*payee).owner] += p.amount;
  } else {
    t.settlement = Settlement::Voided;
    rep.voids.push_back({pseudonym(p.payer), p.tx_id});
    round.result.wallet_credits[devices_.at(p.payer).owner] += p.amount;
  }
  rep.debits.push_back({pseudonym(p.payer), p.commitment_delta, p.tx_id});
  settled_amount_ += p.amount;
  uses.push_back(transfers_.size());
  transfers_.push_back(t);
}

void Intermediary::sweep_pending(Round& round) {
  for (const auto& [bundle_hash, p] : payer_entries_) {
    if (auto acc = accept_evidence_.find(bundle_hash); acc != accept_evidence_.end()) {
      for (const auto& payee : acc->second) settle(round, p, payee);
    }
    if (void_evidence_.contains(bundle_hash)) settle(round, p, std::nullopt);
  }
}

bool Intermediary::process_segment(Round& round, const wallet::DeviceSegment& seg) {
  ReconciliationReport& rep = round.result.report;
  const Pseudonym who = pseudonym(seg.device_id);
  auto reject = [&](std::uint64_t index, std::optional<zkp::TxId> tx, std::string reason) {
    rep.rejected_entries.push_back({who, index, tx, std::move(reason)});
  };
  auto reject_all = [&](const std::string& reason) {
    if (seg.entries.empty()) reject(seg.start_index, std::nullopt, reason);
    for (std::size_t i = 0; i < seg.entries.size(); ++i) {
      reject(seg.start_index + i, seg.entries[i].tx_id, reason);
    }
  };

  auto dev = devices_.find(seg.device_id);
  if (dev == devices_.end() || dev->second.pk != seg.device_pk) {
    reject_all("UnknownDevice");
    return false;
  }
  DeviceRecord& rec = dev->second;
  if (seg.start_index != rec.length || seg.start_head != rec.head) {
    reject_all("ChainMismatch");
    return false;
  }
  if (!se::verify_log_chain(seg.entries, seg.start_head, seg.end_head, rec.pk)) {
    reject_all("LogCorrupt");
    return false;
  }
  rec.head = seg.end_head;
  rec.length = seg.end_index();

  for (const auto& v : seg.voids) {
    if (v.device_id == seg.device_id && v.verify(rec.pk)) {
      void_evidence_.insert(v.bundle_hash);
    } else {
      reject(seg.start_index, v.tx_id, "VoidInvalid");
    }
  }
  for (const auto& a : seg.accepts) {
    se::DeviceId payee = se::device_id_for(a.accept.payee_cert.subject_pk);
    if (a.accept.verify(keys_.pk) && devices_.contains(payee)) {
      accept_evidence_[a.bundle_hash].insert(payee);
    } else {
      reject(seg.start_index, a.accept.tx_id, "AcceptInvalid");
    }
  }

  std::map<Hash32, const zkp::ComplianceBundle*> bundles;
  for (const auto& b : seg.bundles) bundles.emplace(b.hash(), &b);
  std::map<Hash32, const protocol::Receipt*> receipts;
  for (const auto& r : seg.receipts) receipts.emplace(r.bundle_hash, &r);

  for (std::size_t i = 0; i < seg.entries.size(); ++i) {
    const se::OfflineLogEntry& e = seg.entries[i];
    if (!e.is_payment()) continue;
    const std::uint64_t index = seg.start_index + i;
    auto b = bundles.find(e.bundle_hash);
    const zkp::ComplianceBundle* bundle = b == bundles.end() ? nullptr : b->second;
    if (auto reason = check_payment(e, bundle, round.now_epoch)) {
      reject(index, e.tx_id, *reason);
      continue;
    }
    const zkp::PublicInputs& pub = *e.public_inputs;
    VerifiedPayment p{e.tx_id, bundle->nullifier, e.bundle_hash,
                      se::device_id_for(pub.certificate.subject_pk), pub.amount,
                      pub.c_balance_before - bundle->c_balance_after};

    if (e.role == se::LogRole::Payer) {
      if (p.payer != seg.device_id) {
        reject(index, e.tx_id, "PayerMismatch");
        continue;
      }
      payer_entries_.emplace(e.bundle_hash, p);
      continue;
    }

    auto rc = receipts.find(e.bundle_hash);
    if (rc == receipts.end()) {
      reject(index, e.tx_id, "MissingReceipt");
      continue;
    }
    const protocol::Receipt& r = *rc->second;
    if (r.accept.tx_id != e.tx_id || se::device_id_for(r.accept.payee_cert.subject_pk) != seg.device_id ||
        !r.accept.verify(keys_.pk) || !r.commit.verify(pub.certificate.subject_pk, r.accept)) {
      reject(index, e.tx_id, "ReceiptInvalid");
      continue;
    }
    settle(round, p, seg.device_id);
  }
  sweep_pending(round);
  return true;
}

ReconcileResult Intermediary::reconcile(const std::vector<wallet::SyncPayload>& payloads,
                                        std::uint64_t now_epoch) {
  Round round;
  round.now_epoch = now_epoch;
  ByteWriter digest;
  digest.raw("reconcile/v1").u64(now_epoch);
  bool any_segment = false;

  for (std::size_t pi = 0; pi < payloads.size(); ++pi) {
    payloads[pi].encode(digest);
    for (std::size_t si = 0; si < payloads[pi].segments.size(); ++si) {
      const auto& seg = payloads[pi].segments[si];
      any_segment = true;
      if (process_segment(round, seg)) {
        round.result.acks.push_back(
            {pi, si, se::sign_sync_ack(keys_.sk, seg.device_id, seg.end_head, seg.end_index(), now_epoch)});
      }
    }
  }

  ReconciliationReport& rep = round.result.report;
  for (const auto& n : round.flagged) {
    DoubleSpend ds;
    ds.nullifier = n;
    for (std::size_t idx : by_nullifier_.at(n)) {
      ds.tx_ids.push_back(transfers_[idx].tx_id);
      ds.bundle_hashes.push_back(transfers_[idx].bundle_hash);
      ds.device = pseudonym(transfers_[idx].payer);
    }
    rep.double_spends.push_back(std::move(ds));
  }

  if (any_segment) {
    std::int64_t returned = 0;
    for (const auto& [owner, amount] : round.result.wallet_credits) {
      returned += static_cast<std::int64_t>(amount);
    }
    const auto& entry = ledger_.append(ledger::EntryKind::Reconciliation, sha256(digest.bytes()), returned);
    rep.ledger_delta_id = entry.hash();
  }
  return std::move(round.result);
}

std::vector<Disclosure> Intermediary::audit_disclose(const AuditGrant& grant) const {
  if (!auditor_pk_ || !schnorr_verify(*auditor_pk_, grant.signed_message(), grant.grant_sig)) {
    fail(ErrorCode::GrantInvalid);
  }
  const Bytes& v = grant.scope.value;
  auto matches = [&](const TransferRecord& t) {
    switch (grant.scope.kind) {
      case ScopeKind::TxId: return std::equal(v.begin(), v.end(), t.tx_id.begin(), t.tx_id.end());
      case ScopeKind::Nullifier:
        return std::equal(v.begin(), v.end(), t.nullifier.begin(), t.nullifier.end());
      case ScopeKind::DevicePseudonym: {
        Pseudonym p = pseudonym(t.payer);
        return std::equal(v.begin(), v.end(), p.begin(), p.end());
      }
    }
    return false;
  };

  std::vector<Disclosure> out;
  for (const auto& t : transfers_) {
    if (!matches(t)) continue;
    Disclosure d;
    d.tx_id = t.tx_id;
    d.owner_identity = customers_.at(devices_.at(t.payer).owner).identity;
    d.amount = t.amount;
    d.counterparty = t.payee ? to_hex(pseudonym(*t.payee)) : "void";
    out.push_back(std::move(d));
  }
  if (out.empty()) fail(ErrorCode::ScopeUnknown);
  return out;
}

}  // namespace cbdc::fi
