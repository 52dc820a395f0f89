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
#include <string>
#include <string_view>
#include <vector>

#include "cbdc/common/bytes.hpp"

namespace cbdc::ledger {

enum class EntryKind : std::uint8_t { Issuance = 1, Reconciliation = 2 };

std::string_view to_string(EntryKind kind);

struct LedgerEntry {
  std::uint64_t index = 0;
  EntryKind kind = EntryKind::Issuance;
  Hash32 payload_hash{};
  Hash32 prev_hash{};
  std::int64_t amount_delta = 0;

  // SHA-256("ledger/v1" || index || kind || payload_hash || prev_hash || delta)
  Hash32 hash() const;
  // One JSON object with fields in declaration order, then "hash".
  std::string to_json_line() const;
  bool operator==(const LedgerEntry&) const = default;
};

// Single-node, append-only, hash-chained ledger.
class Ledger {
 public:
  // Hash of the last entry; 32 zero bytes when empty.
  Hash32 head() const;
  std::uint64_t size() const { return entries_.size(); }
  const std::vector<LedgerEntry>& entries() const { return entries_; }

  // ChainMismatch unless prev_hash is the head and index the next index.
  const LedgerEntry& append_entry(const LedgerEntry& entry);
  // Builds the next entry against the current head.
  const LedgerEntry& append(EntryKind kind, const Hash32& payload_hash, std::int64_t amount_delta);

  std::uint64_t total_issued() const;
  bool verify_chain() const;
  std::string dump_jsonl() const;

 private:
  std::vector<LedgerEntry> entries_;
};

// The simulator's plaintext view of where every unit of value sits.
struct OmniscientState {
  std::uint64_t main_balances = 0;
  std::uint64_t se_balances = 0;
  // Debited by a payer SE but not yet settled at reconciliation.
  std::uint64_t unreconciled = 0;
  // Settled but withheld by the FI (duplicates, frozen parties).
  std::uint64_t held = 0;
  // Value created by SE rollbacks on devices the FI has since frozen.
  std::int64_t detected_counterfeit = 0;
};

struct ConservationResult {
  bool ok = false;
  // Accounted value minus total issued.
  std::int64_t discrepancy = 0;
};

ConservationResult conservation_check(const Ledger& ledger, const OmniscientState& state);

}  // namespace cbdc::ledger
