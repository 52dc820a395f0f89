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

#include "cbdc/crypto/transcript.hpp"

#include "cbdc/crypto/suite.hpp"

namespace cbdc::crypto {

namespace {
constexpr std::uint8_t kTagAbsorb = 0x01;
constexpr std::uint8_t kTagChallenge = 0x02;
constexpr std::uint8_t kTagFeedback = 0x03;
constexpr std::uint8_t kTagWitness = 0x04;
}  // namespace

Transcript::Transcript(std::string_view domain) {
  ByteWriter w;
  w.raw("cbdc-transcript/v1").u8(active_suite().suite_id).var(domain);
  state_.update(w.bytes());
}

Transcript& Transcript::absorb(std::string_view label, ByteView data) {
  ByteWriter w;
  w.u8(kTagAbsorb).var(label).var(data);
  state_.update(w.bytes());
  return *this;
}

Transcript& Transcript::absorb_point(std::string_view label, const GroupElement& p) {
  auto enc = p.to_bytes();
  return absorb(label, enc);
}

Transcript& Transcript::absorb_scalar(std::string_view label, const Scalar& s) {
  auto enc = s.to_bytes();
  return absorb(label, enc);
}

Transcript& Transcript::absorb_u64(std::string_view label, std::uint64_t v) {
  ByteWriter w;
  w.u64(v);
  return absorb(label, w.bytes());
}

Scalar Transcript::challenge(std::string_view label) {
  Sha512 fork = state_;
  ByteWriter w;
  w.u8(kTagChallenge).var(label);
  Hash64 digest = fork.update(w.bytes()).finish();

  ByteWriter feedback;
  feedback.u8(kTagFeedback).var(label).raw(digest);
  state_.update(feedback.bytes());
  return Scalar::from_wide_be(digest);
}

Scalar Transcript::witness_scalar(std::string_view label, ByteView secret,
                                  std::uint32_t index) const {
  Sha512 fork = state_;
  ByteWriter w;
  w.u8(kTagWitness).var(label).var(secret).u32(index);
  return Scalar::from_wide_be(fork.update(w.bytes()).finish());
}

}  // namespace cbdc::crypto
