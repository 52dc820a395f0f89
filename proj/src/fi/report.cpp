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

#include "cbdc/fi/report.hpp"

namespace cbdc::fi {

bool ReconciliationReport::empty() const {
  return credits.empty() && debits.empty() && voids.empty() && held.empty() &&
         double_spends.empty() && rejected_entries.empty() && !ledger_delta_id;
}

nlohmann::json ReconciliationReport::to_json() const {
  using nlohmann::json;
  json j = json::object();
  j["credits"] = json::array();
  for (const auto& c : credits) {
    j["credits"].push_back({{"payee", to_hex(c.payee)}, {"amount", c.amount}, {"tx_id", to_hex(c.tx_id)}});
  }
  j["debits"] = json::array();
  for (const auto& d : debits) {
    j["debits"].push_back({{"payer", to_hex(d.payer)},
                           {"commitment_delta", to_hex(d.commitment_delta.to_bytes())},
                           {"tx_id", to_hex(d.tx_id)}});
  }
  j["voids"] = json::array();
  for (const auto& v : voids) {
    j["voids"].push_back({{"payer", to_hex(v.payer)}, {"tx_id", to_hex(v.tx_id)}});
  }
  j["held"] = json::array();
  for (const auto& h : held) {
    j["held"].push_back({{"tx_id", to_hex(h.tx_id)}, {"reason", h.reason}});
  }
  j["double_spends"] = json::array();
  for (const auto& d : double_spends) {
    json txs = json::array();
    for (const auto& t : d.tx_ids) txs.push_back(to_hex(t));
    json bundles = json::array();
    for (const auto& b : d.bundle_hashes) bundles.push_back(to_hex(b));
    j["double_spends"].push_back({{"nullifier", to_hex(d.nullifier)},
                                  {"tx_ids", txs},
                                  {"bundle_hashes", bundles},
                                  {"device", to_hex(d.device)}});
  }
  j["rejected_entries"] = json::array();
  for (const auto& r : rejected_entries) {
    j["rejected_entries"].push_back({{"device", to_hex(r.device)},
                                     {"log_index", r.log_index},
                                     {"tx_id", r.tx_id ? json(to_hex(*r.tx_id)) : json(nullptr)},
                                     {"reason", r.reason}});
  }
  j["ledger_delta_id"] = ledger_delta_id ? json(to_hex(*ledger_delta_id)) : json(nullptr);
  return j;
}

}  // namespace cbdc::fi
