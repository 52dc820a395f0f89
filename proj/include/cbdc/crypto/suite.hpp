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

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace cbdc::crypto {

// Names the group, hash and encoding choices. Everything that is hashed into
// a transcript is prefixed by suite_id so vectors are suite-relative.
struct SuiteHeader {
  std::uint8_t suite_id;
  std::size_t element_len;  // E_len
  std::size_t scalar_len;
  std::string_view name;
};

// ristretto255 (prime order ~2^252), SHA-512 for challenges, SHA-256 for ids.
inline constexpr SuiteHeader kRistretto255Sha512{0x01, 32, 32, "ristretto255-sha512"};

inline constexpr const SuiteHeader& active_suite() { return kRistretto255Sha512; }

// Throws UnknownSuite for ids this build does not ship.
const SuiteHeader& suite_by_id(std::uint8_t id);

}  // namespace cbdc::crypto
