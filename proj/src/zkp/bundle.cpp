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

#include "cbdc/zkp/bundle.hpp"

#include "cbdc/common/error.hpp"
#include "cbdc/crypto/codec.hpp"
#include "cbdc/crypto/hash.hpp"

namespace cbdc::zkp {

using namespace crypto;

namespace {

Transcript bundle_transcript(const PublicInputs& pub, const ComplianceBundle& b) {
  Transcript t("cbdc/compliance/v1");
  t.absorb("pub", encode_to_bytes(pub));
  t.absorb_point("c_balance_after", b.c_balance_after);
  t.absorb_point("c_cum_after", b.c_cum_after);
  t.absorb("nullifier", b.nullifier);
  return t;
}

GroupElement headroom_target(std::uint64_t limit, const GroupElement& c_cum_after,
                             const PedersenParams& params) {
  return params.value_term(Scalar::from_u64(limit)) - c_cum_after;
}

}  // namespace

void PublicInputs::encode(ByteWriter& w) const {
  write_point(w, c_balance_before);
  write_point(w, c_cum_before);
  w.u64(amount).u64(limit).u64(per_tx_cap);
  certificate.encode(w);
  w.raw(tx_id);
  w.u64(epoch);
}

PublicInputs PublicInputs::decode(ByteReader& r) {
  PublicInputs p;
  p.c_balance_before = read_point(r);
  p.c_cum_before = read_point(r);
  p.amount = r.u64();
  p.limit = r.u64();
  p.per_tx_cap = r.u64();
  p.certificate = WalletCertificate::decode(r);
  p.tx_id = r.fixed<32>();
  p.epoch = r.u64();
  return p;
}

void ComplianceBundle::encode(ByteWriter& w) const {
  write_point(w, c_balance_after);
  write_point(w, c_cum_after);
  range_balance.encode(w);
  range_headroom.encode(w);
  ownership.encode(w);
  write_signature(w, prev_state_sig);
  write_signature(w, transition_sig);
  w.raw(nullifier);
}

ComplianceBundle ComplianceBundle::decode(ByteReader& r) {
  ComplianceBundle b;
  b.c_balance_after = read_point(r);
  b.c_cum_after = read_point(r);
  b.range_balance = RangeProof::decode(r);
  b.range_headroom = RangeProof::decode(r);
  b.ownership = OwnershipProof::decode(r);
  b.prev_state_sig = read_signature(r);
  b.transition_sig = read_signature(r);
  b.nullifier = r.fixed<32>();
  return b;
}

Hash32 ComplianceBundle::hash() const {
  ByteWriter w;
  w.raw("bundle/v1");
  encode(w);
  return sha256(w.bytes());
}

Bytes state_message(const GroupElement& c_balance, const GroupElement& c_cum) {
  ByteWriter w;
  w.raw("sestate/v1");
  write_point(w, c_balance);
  write_point(w, c_cum);
  return std::move(w).take();
}

Bytes transition_message(const PublicInputs& pub, const ComplianceBundle& bundle) {
  ByteWriter w;
  w.raw("setrans/v1");
  write_point(w, pub.c_balance_before);
  write_point(w, pub.c_cum_before);
  write_point(w, bundle.c_balance_after);
  write_point(w, bundle.c_cum_after);
  w.raw(bundle.nullifier).raw(pub.tx_id).u64(pub.amount);
  return std::move(w).take();
}

ComplianceBundle build_compliance_bundle(const ProverView& view, const PublicInputs& pub,
                                         const PedersenParams& params) {
  const std::uint64_t v = pub.amount;
  if (v == 0 || v > pub.per_tx_cap || v >= kAmountBound) {
    fail(ErrorCode::ValueInvalid, "amount " + std::to_string(v) + " outside [1, T]");
  }
  if (view.balance < v) fail(ErrorCode::InsufficientFunds);
  if (view.cum_spent + v > pub.limit) fail(ErrorCode::LimitExceeded);
  if (view.balance >= kAmountBound || pub.limit >= kAmountBound) {
    fail(ErrorCode::OutOfRange, "balance or limit does not fit the proof width");
  }
  if (params.commit(view.balance, view.r_balance) != pub.c_balance_before ||
      params.commit(view.cum_spent, view.r_cum) != pub.c_cum_before) {
    fail(ErrorCode::InvalidWitness, "openings do not match the public commitments");
  }
  if (view.keys.pk != pub.certificate.subject_pk) {
    fail(ErrorCode::InvalidWitness, "certificate is for a different key");
  }

  ComplianceBundle b;
  b.nullifier = derive_nullifier(view.prf_seed, view.counter);
  if (derive_tx_id(b.nullifier) != pub.tx_id) {
    fail(ErrorCode::InvalidWitness, "tx_id does not match the nullifier");
  }
  GroupElement v_term = params.value_term(Scalar::from_u64(v));
  b.c_balance_after = pub.c_balance_before - v_term;
  b.c_cum_after = pub.c_cum_before + v_term;

  Transcript t = bundle_transcript(pub, b);
  b.range_balance = prove_range(view.balance - v, view.r_balance, kAmountBits, t, params);
  b.range_headroom =
      prove_range(pub.limit - (view.cum_spent + v), -view.r_cum, kAmountBits, t, params);
  b.ownership = prove_ownership(view.keys, t);

  b.prev_state_sig = schnorr_sign(view.keys.sk, state_message(pub.c_balance_before, pub.c_cum_before));
  b.transition_sig = schnorr_sign(view.keys.sk, transition_message(pub, b));
  return b;
}

std::string_view to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::CertificateInvalid: return "CertificateInvalid";
    case RejectReason::CredentialExpired: return "CredentialExpired";
    case RejectReason::PolicyMismatch: return "PolicyMismatch";
    case RejectReason::ValueInvalid: return "ValueInvalid";
    case RejectReason::TxIdMismatch: return "TxIdMismatch";
    case RejectReason::SignatureInvalid: return "SignatureInvalid";
    case RejectReason::ProofInvalid: return "ProofInvalid";
    case RejectReason::OwnershipInvalid: return "OwnershipInvalid";
    case RejectReason::DuplicateTx: return "DuplicateTx";
  }
  return "Unknown";
}

VerifyOutcome verify_compliance_bundle(const ComplianceBundle& bundle, const PublicInputs& pub,
                                       const GroupElement& fi_pub, std::uint64_t now_epoch,
                                       const PedersenParams& params) {
  using R = RejectReason;
  const WalletCertificate& cert = pub.certificate;
  if (!cert.verify(fi_pub)) return VerifyOutcome::reject(R::CertificateInvalid);
  if (now_epoch > cert.expiry_epoch || pub.epoch > cert.expiry_epoch) {
    return VerifyOutcome::reject(R::CredentialExpired);
  }
  if (pub.limit != cert.limits.cum_limit || pub.per_tx_cap != cert.limits.per_tx_cap ||
      pub.limit >= kAmountBound) {
    return VerifyOutcome::reject(R::PolicyMismatch);
  }
  if (pub.amount == 0 || pub.amount > pub.per_tx_cap) return VerifyOutcome::reject(R::ValueInvalid);
  if (derive_tx_id(bundle.nullifier) != pub.tx_id) return VerifyOutcome::reject(R::TxIdMismatch);

  const GroupElement& device_pk = cert.subject_pk;
  if (!schnorr_verify(device_pk, state_message(pub.c_balance_before, pub.c_cum_before),
                      bundle.prev_state_sig) ||
      !schnorr_verify(device_pk, transition_message(pub, bundle), bundle.transition_sig)) {
    return VerifyOutcome::reject(R::SignatureInvalid);
  }

  GroupElement v_term = params.value_term(Scalar::from_u64(pub.amount));
  if (bundle.c_balance_after != pub.c_balance_before - v_term ||
      bundle.c_cum_after != pub.c_cum_before + v_term) {
    return VerifyOutcome::reject(R::ProofInvalid);
  }

  Transcript t = bundle_transcript(pub, bundle);
  try {
    if (!verify_range(bundle.c_balance_after, bundle.range_balance, kAmountBits, t, params) ||
        !verify_range(headroom_target(pub.limit, bundle.c_cum_after, params),
                      bundle.range_headroom, kAmountBits, t, params)) {
      return VerifyOutcome::reject(R::ProofInvalid);
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::LengthMismatch) throw;
    return VerifyOutcome::reject(R::ProofInvalid);
  }
  if (!verify_ownership(device_pk, bundle.ownership, t)) {
    return VerifyOutcome::reject(R::OwnershipInvalid);
  }
  return VerifyOutcome::accept();
}

}  // namespace cbdc::zkp
