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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cbdc/common/bytes.hpp"
#include "cbdc/crypto/group.hpp"
#include "cbdc/zkp/nullifier.hpp"
#include "json.hpp"

namespace cbdc::fi {

// Keyed per-device pseudonym; only the FI can link it to an owner.
using Pseudonym = std::array<std::uint8_t, 16>;

struct Credit {
  Pseudonym payee{};
  std::uint64_t amount = 0;
  zkp::TxId tx_id{};
};

// Payer side carries only the commitment to the debited value.
struct Debit {
  Pseudonym payer{};
  crypto::GroupElement commitment_delta;  // C_balance_before - C_balance_after
  zkp::TxId tx_id{};
};

struct VoidedPayment {
  Pseudonym payer{};
  zkp::TxId tx_id{};
};

struct HeldPayment {
  zkp::TxId tx_id{};
  std::string reason;
};

struct DoubleSpend {
  zkp::Nullifier nullifier{};
  std::vector<zkp::TxId> tx_ids;  // one per distinct transfer
  std::vector<Hash32> bundle_hashes;
  Pseudonym device{};
};

struct RejectedEntry {
  Pseudonym device{};
  std::uint64_t log_index = 0;
  std::optional<zkp::TxId> tx_id;
  std::string reason;
};

struct ReconciliationReport {
  std::vector<Credit> credits;
  std::vector<Debit> debits;
  std::vector<VoidedPayment> voids;
  std::vector<HeldPayment> held;
  std::vector<DoubleSpend> double_spends;
  std::vector<RejectedEntry> rejected_entries;
  std::optional<Hash32> ledger_delta_id;

  bool empty() const;
  // Sorted keys; hashes and pseudonyms in hex.
  nlohmann::json to_json() const;
};

}  // namespace cbdc::fi
