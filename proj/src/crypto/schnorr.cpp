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

#include "cbdc/crypto/schnorr.hpp"

#include "cbdc/common/error.hpp"
#include "cbdc/crypto/transcript.hpp"

namespace cbdc::crypto {

namespace {

Scalar signature_challenge(const GroupElement& pk, const GroupElement& r, ByteView message) {
  Transcript t("schnorr/v1");
  t.absorb_point("pk", pk).absorb_point("R", r).absorb("msg", message);
  return t.challenge("c");
}

}  // namespace

KeyPair KeyPair::from_secret(const Scalar& sk) { return {sk, base_table().mul(sk)}; }

KeyPair KeyPair::derive(ByteView seed_material) {
  return from_secret(hash_to_scalar({as_bytes("keypair/v1"), seed_material}));
}

std::array<std::uint8_t, Signature::kEncodedSize> Signature::to_bytes() const {
  std::array<std::uint8_t, kEncodedSize> out{};
  auto r = commit_point.to_bytes();
  auto s = response.to_bytes();
  std::copy(r.begin(), r.end(), out.begin());
  std::copy(s.begin(), s.end(), out.begin() + GroupElement::kEncodedSize);
  return out;
}

Signature Signature::from_bytes(ByteView bytes) {
  if (bytes.size() != kEncodedSize) throw_length(kEncodedSize, bytes.size());
  return {GroupElement::from_bytes(bytes.first(GroupElement::kEncodedSize)),
          Scalar::from_bytes(bytes.subspan(GroupElement::kEncodedSize))};
}

Signature schnorr_sign(const Scalar& sk, ByteView message) {
  auto sk_bytes = sk.to_bytes();
  Scalar nonce = hash_to_scalar({sk_bytes, message});
  GroupElement pk = base_table().mul(sk);
  GroupElement r = base_table().mul(nonce);
  Scalar c = signature_challenge(pk, r, message);
  return {r, nonce + c * sk};
}

bool schnorr_verify(const GroupElement& pk, ByteView message, const Signature& sig) {
  Scalar c = signature_challenge(pk, sig.commit_point, message);
  return base_table().mul(sig.response) - c * pk == sig.commit_point;
}

bool schnorr_verify_encoded(ByteView pk, ByteView message, ByteView sig) {
  return schnorr_verify(GroupElement::from_bytes(pk), message, Signature::from_bytes(sig));
}

}  // namespace cbdc::crypto
