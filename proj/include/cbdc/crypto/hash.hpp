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

#include <sodium.h>

#include <array>
#include <string_view>

#include "cbdc/common/bytes.hpp"

namespace cbdc::crypto {

using Hash64 = std::array<std::uint8_t, 64>;

// Initialises libsodium once per process. Cheap after the first call.
void ensure_sodium();

class Sha256 {
 public:
  Sha256();
  Sha256& update(ByteView data);
  Sha256& update(std::string_view data) { return update(as_bytes(data)); }
  Hash32 finish() const;

 private:
  crypto_hash_sha256_state state_;
};

class Sha512 {
 public:
  Sha512();
  Sha512& update(ByteView data);
  Sha512& update(std::string_view data) { return update(as_bytes(data)); }
  Hash64 finish() const;

 private:
  crypto_hash_sha512_state state_;
};

Hash32 sha256(ByteView data);
Hash64 sha512(ByteView data);

}  // namespace cbdc::crypto
