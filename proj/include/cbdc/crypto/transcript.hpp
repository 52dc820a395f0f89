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
#include <string_view>

#include "cbdc/common/bytes.hpp"
#include "cbdc/crypto/group.hpp"
#include "cbdc/crypto/hash.hpp"
#include "cbdc/crypto/scalar.hpp"

namespace cbdc::crypto {

// Fiat-Shamir transcript over a running SHA-512 state. Every absorbed item
// is framed as (tag, len(label), label, len(data), data) so that boundaries
// between label and data cannot be shifted.
class Transcript {
 public:
  explicit Transcript(std::string_view domain);

  Transcript& absorb(std::string_view label, ByteView data);
  Transcript& absorb(std::string_view label, std::string_view data) {
    return absorb(label, as_bytes(data));
  }
  Transcript& absorb_point(std::string_view label, const GroupElement& p);
  Transcript& absorb_scalar(std::string_view label, const Scalar& s);
  Transcript& absorb_u64(std::string_view label, std::uint64_t v);

  // Hash-to-scalar of the state plus label; the state then absorbs the
  // output, so consecutive challenges differ.
  Scalar challenge(std::string_view label);

  // Prover-only nonce bound to the public history and a secret. Does not
  // change the transcript.
  Scalar witness_scalar(std::string_view label, ByteView secret, std::uint32_t index) const;

 private:
  Sha512 state_;
};

}  // namespace cbdc::crypto
