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

#include "cbdc/ledger/ledger.hpp"

#include <sstream>

#include "cbdc/common/error.hpp"
#include "cbdc/crypto/hash.hpp"
#include "json.hpp"

namespace cbdc::ledger {

std::string_view to_string(EntryKind kind) {
  switch (kind) {
    case EntryKind::Issuance: return "issuance";
    case EntryKind::Reconciliation: return "reconciliation";
  }
  return "unknown";
}

Hash32 LedgerEntry::hash() const {
  ByteWriter w;
  w.raw("ledger/v1").u64(index).u8(static_cast<std::uint8_t>(kind));
  w.raw(payload_hash).raw(prev_hash).u64(static_cast<std::uint64_t>(amount_delta));
  return crypto::sha256(w.bytes());
}

std::string LedgerEntry::to_json_line() const {
  nlohmann::ordered_json j;
  j["index"] = index;
  j["kind"] = to_string(kind);
  j["payload_hash"] = to_hex(payload_hash);
  j["prev_hash"] = to_hex(prev_hash);
  j["amount_delta"] = amount_delta;
  j["hash"] = to_hex(hash());
  return j.dump();
}

Hash32 Ledger::head() const { return entries_.empty() ? Hash32{} : entries_.back().hash(); }

const LedgerEntry& Ledger::append_entry(const LedgerEntry& entry) {
  if (entry.prev_hash != head()) fail(ErrorCode::ChainMismatch, "prev_hash is not the head");
  if (entry.index != entries_.size()) fail(ErrorCode::ChainMismatch, "index out of sequence");
  entries_.push_back(entry);
  return entries_.back();
}

const LedgerEntry& Ledger::append(EntryKind kind, const Hash32& payload_hash,
                                  std::int64_t amount_delta) {
  return append_entry({entries_.size(), kind, payload_hash, head(), amount_delta});
}

std::uint64_t Ledger::total_issued() const {
  std::uint64_t total = 0;
  for (const auto& e : entries_) {
    if (e.kind == EntryKind::Issuance) total += static_cast<std::uint64_t>(e.amount_delta);
  }
  return total;
}

bool Ledger::verify_chain() const {
  Hash32 prev{};
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].index != i || entries_[i].prev_hash != prev) return false;
    prev = entries_[i].hash();
  }
  return true;
}

std::string Ledger::dump_jsonl() const {
  std::ostringstream out;
  for (const auto& e : entries_) out << e.to_json_line() << '\n';
  return out.str();
}

ConservationResult conservation_check(const Ledger& ledger, const OmniscientState& s) {
  __int128 accounted = static_cast<__int128>(s.main_balances) + s.se_balances + s.unreconciled +
                       s.held - s.detected_counterfeit;
  __int128 diff = accounted - static_cast<__int128>(ledger.total_issued());
  return {diff == 0, static_cast<std::int64_t>(diff)};
}

}  // namespace cbdc::ledger
