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

#include "cbdc/zkp/certificate.hpp"

#include "cbdc/crypto/codec.hpp"

namespace cbdc::zkp {

using namespace crypto;

void Limits::encode(ByteWriter& w) const { w.u64(cum_limit).u64(per_tx_cap).u64(max_tx); }

Limits Limits::decode(ByteReader& r) {
  Limits l;
  l.cum_limit = r.u64();
  l.per_tx_cap = r.u64();
  l.max_tx = r.u64();
  return l;
}

Bytes WalletCertificate::signed_message() const {
  ByteWriter w;
  w.raw("cbdc/cert/v1");
  write_point(w, subject_pk);
  limits.encode(w);
  w.u64(expiry_epoch);
  return std::move(w).take();
}

bool WalletCertificate::verify(const GroupElement& fi_pk) const {
  return schnorr_verify(fi_pk, signed_message(), fi_sig);
}

void WalletCertificate::encode(ByteWriter& w) const {
  write_point(w, subject_pk);
  limits.encode(w);
  w.u64(expiry_epoch);
  write_signature(w, fi_sig);
}

WalletCertificate WalletCertificate::decode(ByteReader& r) {
  WalletCertificate c;
  c.subject_pk = read_point(r);
  c.limits = Limits::decode(r);
  c.expiry_epoch = r.u64();
  c.fi_sig = read_signature(r);
  return c;
}

WalletCertificate sign_certificate(const Scalar& fi_sk, const GroupElement& subject_pk,
                                   const Limits& limits, std::uint64_t expiry_epoch) {
  WalletCertificate c;
  c.subject_pk = subject_pk;
  c.limits = limits;
  c.expiry_epoch = expiry_epoch;
  c.fi_sig = schnorr_sign(fi_sk, c.signed_message());
  return c;
}

}  // namespace cbdc::zkp
