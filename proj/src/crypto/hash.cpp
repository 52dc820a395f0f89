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

#include "cbdc/crypto/hash.hpp"

#include <stdexcept>

namespace cbdc::crypto {

void ensure_sodium() {
  static const bool ready = [] {
    if (sodium_init() < 0) throw std::runtime_error("libsodium failed to initialise");
    return true;
  }();
  (void)ready;
}

Sha256::Sha256() {
  ensure_sodium();
  crypto_hash_sha256_init(&state_);
}

Sha256& Sha256::update(ByteView data) {
  crypto_hash_sha256_update(&state_, data.data(), data.size());
  return *this;
}

Hash32 Sha256::finish() const {
  crypto_hash_sha256_state copy = state_;
  Hash32 out{};
  crypto_hash_sha256_final(&copy, out.data());
  return out;
}

Sha512::Sha512() {
  ensure_sodium();
  crypto_hash_sha512_init(&state_);
}

Sha512& Sha512::update(ByteView data) {
  crypto_hash_sha512_update(&state_, data.data(), data.size());
  return *this;
}

Hash64 Sha512::finish() const {
  crypto_hash_sha512_state copy = state_;
  Hash64 out{};
  crypto_hash_sha512_final(&copy, out.data());
  return out;
}

Hash32 sha256(ByteView data) { return Sha256().update(data).finish(); }
Hash64 sha512(ByteView data) { return Sha512().update(data).finish(); }

}  // namespace cbdc::crypto
