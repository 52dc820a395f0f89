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

#include "cbdc/sim/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "cbdc/common/error.hpp"
#include "cbdc/sim/simulator.hpp"

namespace cbdc::sim {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& where, const std::string& what) {
  fail(ErrorCode::ScenarioInvalid, where + ": " + what);
}

const json& field(const json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) invalid(where, "missing \"" + key + "\"");
  return *it;
}

std::uint64_t get_u64(const json& obj, const std::string& key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    invalid(where, "\"" + key + "\" must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

std::uint64_t get_u64_or(const json& obj, const std::string& key, std::uint64_t def,
                         const std::string& where) {
  return obj.contains(key) ? get_u64(obj, key, where) : def;
}

std::string get_string(const json& obj, const std::string& key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) invalid(where, "\"" + key + "\" must be a string");
  return v.get<std::string>();
}

bool get_bool_or(const json& obj, const std::string& key, bool def, const std::string& where) {
  if (!obj.contains(key)) return def;
  if (!obj[key].is_boolean()) invalid(where, "\"" + key + "\" must be a boolean");
  return obj[key].get<bool>();
}

void allow_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  if (!obj.is_object()) invalid(where, "expected an object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.contains(it.key())) invalid(where, "unknown key \"" + it.key() + "\"");
  }
}

channel::ChannelProfile parse_profile(const std::string& name, const std::string& where) {
  if (name == "nfc") return channel::ChannelProfile::nfc();
  if (name == "ble") return channel::ChannelProfile::ble();
  invalid(where, "unknown channel profile \"" + name + "\"");
}

channel::FaultRates parse_rates(const json& obj, const std::string& where) {
  allow_keys(obj, {"drop", "dup", "corrupt", "truncate", "delay", "max_delay_ticks"}, where);
  channel::FaultRates r;
  auto rate = [&](const char* key, double& out) {
    if (!obj.contains(key)) return;
    if (!obj[key].is_number() || obj[key].get<double>() < 0 || obj[key].get<double>() > 1) {
      invalid(where, std::string("\"") + key + "\" must be a probability");
    }
    out = obj[key].get<double>();
  };
  rate("drop", r.drop);
  rate("dup", r.duplicate);
  rate("corrupt", r.corrupt);
  rate("truncate", r.truncate);
  rate("delay", r.delay);
  r.max_delay_ticks = static_cast<std::uint32_t>(get_u64_or(obj, "max_delay_ticks", 5, where));
  if (r.drop + r.duplicate + r.corrupt + r.truncate + r.delay > 1.0) {
    invalid(where, "fault rates sum above 1");
  }
  return r;
}

channel::FaultKind parse_fault_kind(const std::string& s, const std::string& where) {
  if (s == "drop") return channel::FaultKind::Drop;
  if (s == "dup") return channel::FaultKind::Duplicate;
  if (s == "corrupt") return channel::FaultKind::Corrupt;
  if (s == "truncate") return channel::FaultKind::Truncate;
  if (s == "delay") return channel::FaultKind::Delay;
  invalid(where, "unknown fault kind \"" + s + "\"");
}

fi::ScopeKind parse_scope(const std::string& s, const std::string& where) {
  if (s == "tx") return fi::ScopeKind::TxId;
  if (s == "nullifier") return fi::ScopeKind::Nullifier;
  if (s == "device") return fi::ScopeKind::DevicePseudonym;
  invalid(where, "unknown audit scope \"" + s + "\"");
}

std::string opt_hex(const auto& v) { return v ? to_hex(*v) : std::string(); }

// Checks every step against the declared actors before anything runs.
void validate_script(const json& script, const std::set<std::string>& wallets,
                     const std::set<std::string>& devices) {
  if (!script.is_array()) invalid("script", "must be an array");
  std::uint64_t pays = 0;
  for (std::size_t i = 0; i < script.size(); ++i) {
    const json& s = script[i];
    const std::string where = "script[" + std::to_string(i) + "]";
    if (!s.is_object()) invalid(where, "expected an object");
    const std::string op = get_string(s, "op", where);
    auto wallet = [&](const char* key) {
      std::string w = get_string(s, key, where);
      if (!wallets.contains(w)) invalid(where, "unknown wallet \"" + w + "\"");
    };
    auto device = [&](const char* key) {
      std::string d = get_string(s, key, where);
      if (!devices.contains(d)) invalid(where, "unknown device \"" + d + "\"");
    };
    if (op == "onboard") {
      allow_keys(s, {"op", "wallet"}, where);
      wallet("wallet");
    } else if (op == "issue") {
      allow_keys(s, {"op", "wallet", "amount"}, where);
      wallet("wallet");
      get_u64(s, "amount", where);
    } else if (op == "allocate") {
      allow_keys(s, {"op", "wallet", "device", "amount"}, where);
      wallet("wallet");
      device("device");
      get_u64(s, "amount", where);
    } else if (op == "reclaim") {
      allow_keys(s, {"op", "device"}, where);
      device("device");
    } else if (op == "pay") {
      allow_keys(s, {"op", "from", "to", "amount", "channel"}, where);
      device("from");
      device("to");
      if (s["from"] == s["to"]) invalid(where, "payer and payee must differ");
      get_u64(s, "amount", where);
      if (s.contains("channel")) parse_profile(get_string(s, "channel", where), where);
      ++pays;
    } else if (op == "inject_fault") {
      allow_keys(s, {"op", "frame", "kind", "ticks", "rates"}, where);
      if (s.contains("rates")) {
        parse_rates(s["rates"], where + ".rates");
      } else {
        get_u64(s, "frame", where);
        parse_fault_kind(get_string(s, "kind", where), where);
        get_u64_or(s, "ticks", 0, where);
      }
    } else if (op == "attack_rollback") {
      allow_keys(s, {"op", "device", "action"}, where);
      device("device");
      std::string action = get_string(s, "action", where);
      if (action != "snapshot" && action != "restore") invalid(where, "action must be snapshot or restore");
    } else if (op == "advance_epoch") {
      allow_keys(s, {"op", "by"}, where);
      get_u64_or(s, "by", 1, where);
    } else if (op == "sync") {
      allow_keys(s, {"op", "wallets"}, where);
      if (s.contains("wallets")) {
        if (!s["wallets"].is_array()) invalid(where, "\"wallets\" must be an array");
        for (const auto& w : s["wallets"]) {
          if (!w.is_string() || !wallets.contains(w.get<std::string>())) invalid(where, "unknown wallet in sync");
        }
      }
    } else if (op == "audit") {
      allow_keys(s, {"op", "scope", "payment", "device", "forged"}, where);
      fi::ScopeKind kind = parse_scope(get_string(s, "scope", where), where);
      if (kind == fi::ScopeKind::DevicePseudonym) {
        device("device");
      } else if (get_u64(s, "payment", where) >= pays) {
        invalid(where, "audit refers to a payment that has not happened yet");
      }
      get_bool_or(s, "forged", false, where);
    } else {
      invalid(where, "unknown op \"" + op + "\"");
    }
  }
}

zkp::Limits parse_limits(const json& obj, const std::string& where) {
  allow_keys(obj, {"L", "T", "K"}, where);
  zkp::Limits l{10000, 2000, 64};
  l.cum_limit = get_u64_or(obj, "L", l.cum_limit, where);
  l.per_tx_cap = get_u64_or(obj, "T", l.per_tx_cap, where);
  l.max_tx = get_u64_or(obj, "K", l.max_tx, where);
  return l;
}

json payment_json(const PaymentRecord& p) {
  json j;
  j["index"] = p.index;
  j["payer"] = p.payer;
  j["payee"] = p.payee;
  j["amount"] = p.amount;
  j["channel"] = p.profile;
  j["refused"] = p.refused ? json(*p.refused) : json(nullptr);
  j["tx_id"] = p.tx_id ? json(to_hex(*p.tx_id)) : json(nullptr);
  j["payer_status"] = p.payer_status ? json(protocol::to_string(*p.payer_status)) : json(nullptr);
  j["payee_status"] = p.payee_status ? json(protocol::to_string(*p.payee_status)) : json(nullptr);
  j["payee_reject"] = p.payee_reject ? json(zkp::to_string(*p.payee_reject)) : json(nullptr);
  j["start_tick"] = p.start_tick;
  j["latency_ticks"] = p.latency_ticks ? json(*p.latency_ticks) : json(nullptr);
  j["proof_bytes"] = p.proof_bytes;
  j["trace"] = p.trace;
  return j;
}

void validate_expected(const json& expected, const std::set<std::string>& wallets,
                       const std::set<std::string>& devices) {
  allow_keys(expected,
             {"double_spends", "conservation_failures", "final_conservation", "wallet_balances",
              "device_balances", "payer_statuses", "total_issued", "rejected_entries",
              "step_errors", "credits", "voids"},
             "expected");
  for (const char* key : {"wallet_balances", "device_balances"}) {
    if (!expected.contains(key)) continue;
    const json& m = expected[key];
    if (!m.is_object()) invalid("expected", std::string(key) + " must be an object");
    const auto& known = std::string(key) == "wallet_balances" ? wallets : devices;
    for (auto it = m.begin(); it != m.end(); ++it) {
      if (!known.contains(it.key())) invalid("expected", "unknown actor \"" + it.key() + "\"");
    }
  }
}

void check_expected(const json& expected, const json& report, const Simulator& sim,
                    std::vector<std::string>& failures) {
  auto expect_eq = [&](const std::string& what, const json& want, const json& got) {
    if (want != got) failures.push_back(what + ": expected " + want.dump() + ", got " + got.dump());
  };
  std::uint64_t credits = 0, voids = 0, rejected = 0;
  for (const auto& s : sim.syncs()) {
    credits += s.report.credits.size();
    voids += s.report.voids.size();
    rejected += s.report.rejected_entries.size();
  }
  for (auto it = expected.begin(); it != expected.end(); ++it) {
    const std::string& k = it.key();
    const json& want = it.value();
    if (k == "double_spends") expect_eq(k, want, report["double_spends"]);
    if (k == "conservation_failures") expect_eq(k, want, report["conservation"]["failures"]);
    if (k == "final_conservation") expect_eq(k, want, report["conservation"]["final_ok"]);
    if (k == "total_issued") expect_eq(k, want, report["ledger"]["total_issued"]);
    if (k == "rejected_entries") expect_eq(k, want, rejected);
    if (k == "credits") expect_eq(k, want, credits);
    if (k == "voids") expect_eq(k, want, voids);
    if (k == "step_errors") expect_eq(k, want, report["step_errors"].size());
    if (k == "payer_statuses") {
      json got = json::array();
      for (const auto& p : report["payments"]) got.push_back(p["refused"].is_null() ? p["payer_status"] : p["refused"]);
      expect_eq(k, want, got);
    }
    if (k == "wallet_balances" || k == "device_balances") {
      const json& have = report["balances"][k == "wallet_balances" ? "wallets" : "devices"];
      for (auto w = want.begin(); w != want.end(); ++w) {
        json got = have.contains(w.key())
                       ? (k == "wallet_balances" ? have[w.key()] : have[w.key()]["balance"])
                       : json(nullptr);
        expect_eq(k + "." + w.key(), w.value(), got);
      }
    }
  }
}

}  // namespace

json load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ScenarioInvalid, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  json j = json::parse(buf.str(), nullptr, false);
  if (j.is_discarded()) fail(ErrorCode::ScenarioInvalid, path + ": not valid JSON");
  return j;
}

ScenarioResult run_scenario(const json& scenario, std::optional<std::uint64_t> seed_override) {
  allow_keys(scenario, {"name", "seed", "channel", "timeout_ticks", "actors", "script", "expected"},
             "scenario");
  const std::string name = scenario.contains("name") ? get_string(scenario, "name", "scenario") : "";
  const std::uint64_t seed = seed_override ? *seed_override : get_u64_or(scenario, "seed", 0, "scenario");
  const std::uint64_t timeout =
      get_u64_or(scenario, "timeout_ticks", protocol::kDefaultTimeoutTicks, "scenario");
  if (timeout == 0) invalid("scenario", "timeout_ticks must be positive");

  channel::ChannelProfile default_profile = channel::ChannelProfile::nfc();
  channel::FaultRates default_rates;
  if (scenario.contains("channel")) {
    const json& ch = scenario["channel"];
    allow_keys(ch, {"profile", "rates"}, "channel");
    if (ch.contains("profile")) default_profile = parse_profile(get_string(ch, "profile", "channel"), "channel");
    if (ch.contains("rates")) default_rates = parse_rates(ch["rates"], "channel.rates");
  }

  Simulator sim(seed, timeout);
  const json& actors = field(scenario, "actors", "scenario");
  allow_keys(actors, {"wallets", "auditor"}, "actors");
  const json& wallets = field(actors, "wallets", "actors");
  if (!wallets.is_array()) invalid("actors", "\"wallets\" must be an array");
  std::set<std::string> wallet_names, device_names;
  for (std::size_t i = 0; i < wallets.size(); ++i) {
    const std::string where = "actors.wallets[" + std::to_string(i) + "]";
    const json& w = wallets[i];
    allow_keys(w, {"name", "kyc", "devices"}, where);
    WalletSpec spec;
    spec.name = get_string(w, "name", where);
    spec.kyc_doc = w.contains("kyc") ? w["kyc"].dump() : json{{"name", spec.name}}.dump();
    if (w.contains("devices")) {
      if (!w["devices"].is_array()) invalid(where, "\"devices\" must be an array");
      for (std::size_t k = 0; k < w["devices"].size(); ++k) {
        const std::string dw = where + ".devices[" + std::to_string(k) + "]";
        const json& d = w["devices"][k];
        allow_keys(d, {"name", "limits", "expiry_epoch"}, dw);
        DeviceSpec ds;
        ds.name = get_string(d, "name", dw);
        if (d.contains("limits")) ds.limits = parse_limits(d["limits"], dw + ".limits");
        ds.expiry_epoch = get_u64_or(d, "expiry_epoch", ds.expiry_epoch, dw);
        if (!device_names.insert(ds.name).second) invalid(dw, "duplicate device name");
        spec.devices.push_back(ds);
      }
    }
    if (!wallet_names.insert(spec.name).second) invalid(where, "duplicate wallet name");
    sim.declare_wallet(spec);
  }
  if (get_bool_or(actors, "auditor", false, "actors")) sim.declare_auditor();

  const json& script = field(scenario, "script", "scenario");
  validate_script(script, wallet_names, device_names);
  if (scenario.contains("expected")) validate_expected(scenario["expected"], wallet_names, device_names);

  json step_errors = json::array();
  json audits = json::array();
  channel::FaultRates next_rates = default_rates;
  std::map<std::uint64_t, channel::Fault> next_faults;

  for (std::size_t i = 0; i < script.size(); ++i) {
    const json& s = script[i];
    const std::string op = s["op"];
    try {
      if (op == "onboard") {
        sim.onboard(s["wallet"]);
        sim.step_tick();
      } else if (op == "issue") {
        sim.issue(s["wallet"], s["amount"]);
        sim.step_tick();
      } else if (op == "allocate") {
        sim.allocate(s["wallet"], s["device"], s["amount"]);
        sim.step_tick();
      } else if (op == "reclaim") {
        sim.reclaim(s["device"]);
        sim.step_tick();
      } else if (op == "pay") {
        channel::ChannelProfile profile =
            s.contains("channel") ? parse_profile(s["channel"], "pay") : default_profile;
        auto rates = next_rates;
        auto faults = std::move(next_faults);
        next_rates = default_rates;
        next_faults.clear();
        sim.pay(s["from"], s["to"], s["amount"], profile, rates, faults);
      } else if (op == "inject_fault") {
        if (s.contains("rates")) {
          next_rates = parse_rates(s["rates"], "inject_fault");
        } else {
          channel::Fault f{parse_fault_kind(s["kind"], "inject_fault"),
                           static_cast<std::uint32_t>(s.value("ticks", 0))};
          next_faults[s["frame"].get<std::uint64_t>()] = f;
        }
      } else if (op == "attack_rollback") {
        if (s["action"] == "snapshot") {
          sim.snapshot(s["device"]);
        } else {
          sim.restore(s["device"]);
        }
        sim.step_tick();
      } else if (op == "advance_epoch") {
        sim.advance_epoch(s.value("by", std::uint64_t{1}));
      } else if (op == "sync") {
        std::vector<std::string> names;
        if (s.contains("wallets")) names = s["wallets"].get<std::vector<std::string>>();
        sim.sync(names);
      } else if (op == "audit") {
        fi::ScopeKind kind = parse_scope(s["scope"], "audit");
        Bytes value;
        if (kind == fi::ScopeKind::DevicePseudonym) {
          auto p = sim.device_pseudonym(s["device"]);
          value.assign(p.begin(), p.end());
        } else {
          const PaymentRecord& p = sim.payments().at(s["payment"].get<std::uint64_t>());
          if (kind == fi::ScopeKind::TxId && p.tx_id) value.assign(p.tx_id->begin(), p.tx_id->end());
          if (kind == fi::ScopeKind::Nullifier && p.nullifier) {
            value.assign(p.nullifier->begin(), p.nullifier->end());
          }
        }
        json a = sim.audit(kind, value, s.value("forged", false));
        a["step"] = i;
        audits.push_back(a);
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ScenarioInvalid) throw;
      step_errors.push_back({{"step", i}, {"op", op}, {"error", to_string(e.code())}});
      if (op != "pay" && op != "sync" && op != "audit") sim.step_tick();
    }
  }

  json report;
  report["scenario"] = name;
  report["seed"] = seed;
  json payments = json::array();
  json timing_payments = json::array();
  json latencies = json::array();
  bool sizes_match = true;
  std::uint64_t observed_range_bytes = 0;
  const std::uint64_t analytic = zkp::range_proof_analytic_size(zkp::kAmountBits);
  for (const auto& p : sim.payments()) {
    payments.push_back(payment_json(p));
    if (!p.refused) {
      timing_payments.push_back({{"index", p.index}, {"prove_ms", p.prove_ms}, {"verify_ms", p.verify_ms}});
      observed_range_bytes = p.range_proof_bytes;
      sizes_match = sizes_match && p.range_proof_bytes == analytic &&
                    p.proof_bytes == 2 * analytic + zkp::OwnershipProof::kEncodedSize;
    }
    if (p.latency_ticks) latencies.push_back(*p.latency_ticks);
  }
  report["payments"] = payments;

  json metrics;
  metrics["proof_size"] = {{"range_bits", zkp::kAmountBits},
                           {"range_proof_bytes", observed_range_bytes},
                           {"analytic_range_proof_bytes", analytic},
                           {"bundle_proof_bytes", 2 * analytic + zkp::OwnershipProof::kEncodedSize},
                           {"matches_analytic", sizes_match}};
  metrics["offline_latency_ticks"] = latencies;
  json delays = json::array();
  json syncs = json::array();
  json timing_syncs = json::array();
  for (const auto& s : sim.syncs()) {
    for (auto d : s.settle_delay_ticks) delays.push_back(d);
    syncs.push_back({{"round", s.round},
                     {"tick", s.tick},
                     {"epoch", s.epoch},
                     {"wallets", s.wallets},
                     {"entries", s.entries},
                     {"acked_segments", s.acked_segments},
                     {"report", s.report.to_json()}});
    timing_syncs.push_back({{"round", s.round}, {"reconcile_ms", s.reconcile_ms}});
  }
  metrics["sync_delay_ticks"] = delays;
  json storage = json::object();
  json devices = json::object();
  for (const auto& d : sim.device_names()) {
    if (!sim.has_device(d)) continue;
    se::SeInspection st = sim.device_state(d);
    std::uint64_t bytes = 0;
    std::uint64_t log_len = 0;
    try {
      const auto& log = sim.device(d).se().log();
      log_len = log.size();
      for (const auto& e : log) bytes += encode_to_bytes(e).size();
      bytes += 32;  // head
    } catch (const Error&) {
    }
    storage[d] = bytes;
    devices[d] = {{"balance", st.balance}, {"cum_spent", st.cum_spent}, {"counter", st.counter},
                  {"log_entries", log_len}};
  }
  metrics["log_storage_bytes"] = storage;
  report["metrics"] = metrics;
  report["syncs"] = syncs;
  report["double_spends"] = sim.double_spend_count();

  const ConservationLog& c = sim.conservation();
  ledger::ConservationResult final_check = ledger::conservation_check(sim.fi().ledger(), sim.omniscient());
  report["conservation"] = {{"checks", c.checks},
                            {"failures", c.failures},
                            {"first_failure_tick", c.first_failure_tick ? json(*c.first_failure_tick) : json(nullptr)},
                            {"first_failure_discrepancy", c.first_failure_discrepancy},
                            {"final_ok", final_check.ok},
                            {"final_discrepancy", final_check.discrepancy}};
  const ledger::Ledger& l = sim.fi().ledger();
  report["ledger"] = {{"entries", l.size()},
                      {"total_issued", l.total_issued()},
                      {"chain_valid", l.verify_chain()},
                      {"head", to_hex(l.head())}};
  json wallet_bal = json::object();
  for (const auto& w : sim.wallet_names()) wallet_bal[w] = sim.wallet_balance(w);
  report["balances"] = {{"wallets", wallet_bal}, {"devices", devices}};
  report["audits"] = audits;
  report["step_errors"] = step_errors;
  report["timing"] = {{"payments", timing_payments}, {"syncs", timing_syncs}};

  ScenarioResult result;
  if (scenario.contains("expected")) {
    check_expected(scenario["expected"], report, sim, result.expectation_failures);
    report["expected"] = {{"checked", scenario["expected"].size()},
                          {"failures", result.expectation_failures}};
  }
  result.report = std::move(report);
  return result;
}

json without_timing(json report) {
  report.erase("timing");
  return report;
}

std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

}  // namespace cbdc::sim
