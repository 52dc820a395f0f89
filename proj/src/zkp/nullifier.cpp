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

#include "cbdc/zkp/nullifier.hpp"

#include "cbdc/crypto/hash.hpp"

namespace cbdc::zkp {

Nullifier derive_nullifier(const Hash32& prf_seed, std::uint64_t counter) {
  ByteWriter w;
  w.raw("nullifier/v1").raw(prf_seed).u64(counter);
  return crypto::sha256(w.bytes());
}

TxId derive_tx_id(const Nullifier& nullifier) {
  ByteWriter w;
  w.raw("txid/v1").raw(nullifier);
  return crypto::sha256(w.bytes());
}

}  // namespace cbdc::zkp
