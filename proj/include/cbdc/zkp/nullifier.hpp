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

#include "cbdc/common/bytes.hpp"

namespace cbdc::zkp {

using Nullifier = Hash32;
using TxId = Hash32;

// SHA-256("nullifier/v1" || prf_seed || counter as u64 big-endian)
Nullifier derive_nullifier(const Hash32& prf_seed, std::uint64_t counter);

// SHA-256("txid/v1" || nullifier)
TxId derive_tx_id(const Nullifier& nullifier);

}  // namespace cbdc::zkp
