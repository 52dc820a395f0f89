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

#include <array>

#include "cbdc/common/bytes.hpp"
#include "cbdc/crypto/group.hpp"
#include "cbdc/crypto/scalar.hpp"

namespace cbdc::crypto {

struct KeyPair {
  Scalar sk;
  GroupElement pk;

  static KeyPair from_secret(const Scalar& sk);
  // Secret = hash_to_scalar(seed material); used by the simulator.
  static KeyPair derive(ByteView seed_material);
};

struct Signature {
  static constexpr std::size_t kEncodedSize = GroupElement::kEncodedSize + Scalar::kEncodedSize;

  GroupElement commit_point;
  Scalar response;

  // encode(commit_point) || encode(response)
  std::array<std::uint8_t, kEncodedSize> to_bytes() const;
  static Signature from_bytes(ByteView bytes);

  bool operator==(const Signature& o) const {
    return commit_point == o.commit_point && response == o.response;
  }
};

Signature schnorr_sign(const Scalar& sk, ByteView message);
bool schnorr_verify(const GroupElement& pk, ByteView message, const Signature& sig);
// Decodes pk and signature first; malformed encodings raise DecodeError.
bool schnorr_verify_encoded(ByteView pk, ByteView message, ByteView sig);

}  // namespace cbdc::crypto
