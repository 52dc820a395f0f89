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

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cbdc/common/error.hpp"
#include "cbdc/crypto/transcript.hpp"
#include "cbdc/se/types.hpp"
#include "cbdc/sim/scenario.hpp"
#include "cbdc/sim/simulator.hpp"
#include "support/bundle_fixture.hpp"

using namespace cbdc;
using crypto::GroupElement;
using crypto::Scalar;
using crypto::Transcript;
using nlohmann::json;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double ms_since(std::chrono::steady_clock::time_point t0) { return seconds_since(t0) * 1000.0; }

std::vector<std::filesystem::path> scenario_files(const std::string& dir) {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.path().extension() == ".json") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_honest(const json& scenario) {
  for (const auto& step : scenario["script"]) {
    if (step["op"] == "attack_rollback") return false;
  }
  return true;
}

// Two wallets with two devices each; every device loaded with `load`.
void world(sim::Simulator& s, std::uint64_t load) {
  s.declare_wallet({"alice", R"({"name":"Alice"})", {{"a1"}, {"a2"}}});
  s.declare_wallet({"bob", R"({"name":"Bob"})", {{"b1"}, {"b2"}}});
  s.onboard("alice");
  s.onboard("bob");
  s.issue("alice", 4 * load);
  s.issue("bob", 4 * load);
  for (const char* d : {"a1", "a2"}) s.allocate("alice", d, load);
  for (const char* d : {"b1", "b2"}) s.allocate("bob", d, load);
}

const std::vector<std::string> kDevices{"a1", "a2", "b1", "b2"};

std::string owner_of(const std::string& device) { return device[0] == 'a' ? "alice" : "bob"; }

// ---------------------------------------------------------------------------

Verdict zkp_completeness() {
  auto t0 = std::chrono::steady_clock::now();
  std::uint64_t payments = 0, accepted = 0, credited = 0, rejected_entries = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    sim::Simulator s(seed);
    world(s, 8000);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 50; ++i) {
      std::string from = kDevices[rng() % 4];
      std::string to;
      do {
        to = kDevices[rng() % 4];
      } while (to == from);
      std::uint64_t amount = 1 + rng() % 300;
      const auto& p = s.pay(from, to, amount, channel::ChannelProfile::nfc());
      ++payments;
      if (!p.refused && !p.payee_reject && p.payee_status == protocol::PaymentStatus::Completed) ++accepted;
    }
    s.advance_epoch(1);
    const auto& r = s.sync();
    credited += r.report.credits.size();
    rejected_entries += r.report.rejected_entries.size();
  }
  double secs = seconds_since(t0);
  std::ostringstream d;
  d << accepted << "/" << payments << " accepted by payee, " << credited << " credited at reconciliation, "
    << rejected_entries << " rejected entries, " << secs << " s (target < 60 s)";
  return {payments == 1000 && accepted == payments && credited == payments && rejected_entries == 0 && secs < 60.0,
          d.str()};
}

// ---------------------------------------------------------------------------

// Applies `how` to a point: add the value generator, or flip one bit of the
// encoding (which may not decode, in which case the input is unrepresentable).
enum class Mode { Field, Bit };

struct Unrepresentable {};

void mutate_point(GroupElement& p, Mode m, std::mt19937_64& rng) {
  if (m == Mode::Field) {
    p += crypto::default_params().g_val();
    return;
  }
  auto b = p.to_bytes();
  b[rng() % b.size()] ^= static_cast<std::uint8_t>(1u << (rng() % 8));
  try {
    p = GroupElement::from_bytes(b);
  } catch (const Error&) {
    throw Unrepresentable{};
  }
}

void mutate_scalar(Scalar& s, Mode m, std::mt19937_64& rng) {
  if (m == Mode::Field) {
    s += Scalar::one();
    return;
  }
  auto b = s.to_bytes();
  b[rng() % b.size()] ^= static_cast<std::uint8_t>(1u << (rng() % 8));
  try {
    s = Scalar::from_bytes(b);
  } catch (const Error&) {
    throw Unrepresentable{};
  }
}

void mutate_u64(std::uint64_t& v, Mode m, std::mt19937_64& rng) {
  if (m == Mode::Field) {
    v += 1;
  } else {
    v ^= std::uint64_t{1} << (rng() % 64);
  }
}

void mutate_hash(Hash32& h, Mode m, std::mt19937_64& rng) {
  if (m == Mode::Field) {
    h[0] ^= 0xff;
  } else {
    h[rng() % h.size()] ^= static_cast<std::uint8_t>(1u << (rng() % 8));
  }
}

using Mutator = std::function<void(zkp::ComplianceBundle&, zkp::PublicInputs&, Mode, std::mt19937_64&)>;

std::vector<std::pair<std::string, Mutator>> mutation_classes() {
  std::vector<std::pair<std::string, Mutator>> out;
  auto add = [&](std::string name, Mutator fn) { out.emplace_back(std::move(name), std::move(fn)); };
  using B = zkp::ComplianceBundle;
  using P = zkp::PublicInputs;
  using M = Mode;
  using R = std::mt19937_64;

  add("pub.c_balance_before", [](B&, P& p, M m, R& r) { mutate_point(p.c_balance_before, m, r); });
  add("pub.c_cum_before", [](B&, P& p, M m, R& r) { mutate_point(p.c_cum_before, m, r); });
  add("pub.amount", [](B&, P& p, M m, R& r) { mutate_u64(p.amount, m, r); });
  add("pub.limit", [](B&, P& p, M m, R& r) { mutate_u64(p.limit, m, r); });
  add("pub.per_tx_cap", [](B&, P& p, M m, R& r) { mutate_u64(p.per_tx_cap, m, r); });
  add("pub.cert.subject_pk", [](B&, P& p, M m, R& r) { mutate_point(p.certificate.subject_pk, m, r); });
  add("pub.cert.cum_limit", [](B&, P& p, M m, R& r) { mutate_u64(p.certificate.limits.cum_limit, m, r); });
  add("pub.cert.per_tx_cap", [](B&, P& p, M m, R& r) { mutate_u64(p.certificate.limits.per_tx_cap, m, r); });
  add("pub.cert.max_tx", [](B&, P& p, M m, R& r) { mutate_u64(p.certificate.limits.max_tx, m, r); });
  add("pub.cert.expiry", [](B&, P& p, M m, R& r) { mutate_u64(p.certificate.expiry_epoch, m, r); });
  add("pub.cert.sig.R", [](B&, P& p, M m, R& r) { mutate_point(p.certificate.fi_sig.commit_point, m, r); });
  add("pub.cert.sig.s", [](B&, P& p, M m, R& r) { mutate_scalar(p.certificate.fi_sig.response, m, r); });
  add("pub.tx_id", [](B&, P& p, M m, R& r) { mutate_hash(p.tx_id, m, r); });
  add("pub.epoch", [](B&, P& p, M m, R& r) { mutate_u64(p.epoch, m, r); });

  add("bundle.c_balance_after", [](B& b, P&, M m, R& r) { mutate_point(b.c_balance_after, m, r); });
  add("bundle.c_cum_after", [](B& b, P&, M m, R& r) { mutate_point(b.c_cum_after, m, r); });
  for (const char* which : {"range_balance", "range_headroom"}) {
    auto range = [which](B& b) -> zkp::RangeProof& {
      return std::string(which) == "range_balance" ? b.range_balance : b.range_headroom;
    };
    std::string pre = std::string("bundle.") + which;
    add(pre + ".bit_commitment", [range](B& b, P&, M m, R& r) {
      auto& rp = range(b);
      mutate_point(rp.bit_commitments[r() % rp.bit_commitments.size()], m, r);
    });
    auto bit = [range](B& b, R& r) -> zkp::BitProof& {
      auto& rp = range(b);
      return rp.bit_proofs[r() % rp.bit_proofs.size()];
    };
    add(pre + ".bit.a0", [bit](B& b, P&, M m, R& r) { mutate_point(bit(b, r).a0, m, r); });
    add(pre + ".bit.a1", [bit](B& b, P&, M m, R& r) { mutate_point(bit(b, r).a1, m, r); });
    add(pre + ".bit.c0", [bit](B& b, P&, M m, R& r) { mutate_scalar(bit(b, r).c0, m, r); });
    add(pre + ".bit.c1", [bit](B& b, P&, M m, R& r) { mutate_scalar(bit(b, r).c1, m, r); });
    add(pre + ".bit.z0", [bit](B& b, P&, M m, R& r) { mutate_scalar(bit(b, r).z0, m, r); });
    add(pre + ".bit.z1", [bit](B& b, P&, M m, R& r) { mutate_scalar(bit(b, r).z1, m, r); });
    add(pre + ".consistency", [range](B& b, P&, M m, R& r) { mutate_scalar(range(b).consistency_response, m, r); });
  }
  add("bundle.ownership.R", [](B& b, P&, M m, R& r) { mutate_point(b.ownership.commit_point, m, r); });
  add("bundle.ownership.s", [](B& b, P&, M m, R& r) { mutate_scalar(b.ownership.response, m, r); });
  add("bundle.prev_state_sig.R", [](B& b, P&, M m, R& r) { mutate_point(b.prev_state_sig.commit_point, m, r); });
  add("bundle.prev_state_sig.s", [](B& b, P&, M m, R& r) { mutate_scalar(b.prev_state_sig.response, m, r); });
  add("bundle.transition_sig.R", [](B& b, P&, M m, R& r) { mutate_point(b.transition_sig.commit_point, m, r); });
  add("bundle.transition_sig.s", [](B& b, P&, M m, R& r) { mutate_scalar(b.transition_sig.response, m, r); });
  add("bundle.nullifier", [](B& b, P&, M m, R& r) { mutate_hash(b.nullifier, m, r); });
  return out;
}

Verdict zkp_soundness() {
  const auto classes = mutation_classes();
  std::mt19937_64 rng(2026);
  std::uint64_t bundles = 0, trials = 0, rejected = 0, unrepresentable = 0, unchanged = 0;
  std::vector<std::string> false_accepts;
  for (int i = 0; i < 50; ++i) {
    testing::PaymentParams pp;
    pp.balance = 2000 + rng() % 100000;
    pp.cum = rng() % 5000;
    pp.limit = pp.cum + 5000 + rng() % 5000;
    pp.cap = 1 + rng() % 3000;
    pp.amount = 1 + rng() % std::min(pp.cap, pp.balance);
    pp.counter = 1 + rng() % 60;
    auto h = testing::make_payment("sound/" + std::to_string(i), pp);
    if (!zkp::verify_compliance_bundle(h.bundle, h.pub, h.fi.pk, pp.epoch).accepted()) {
      false_accepts.push_back("honest bundle " + std::to_string(i) + " rejected");
      continue;
    }
    ++bundles;
    for (const auto& [name, fn] : classes) {
      for (Mode m : {Mode::Field, Mode::Bit}) {
        auto b = h.bundle;
        auto p = h.pub;
        ++trials;
        try {
          fn(b, p, m, rng);
        } catch (const Unrepresentable&) {
          ++unrepresentable;
          continue;
        }
        if (b == h.bundle && p == h.pub) {
          ++unchanged;
          continue;
        }
        bool accepted = false;
        try {
          accepted = zkp::verify_compliance_bundle(b, p, h.fi.pk, pp.epoch).accepted();
        } catch (const Error&) {
          accepted = false;
        }
        if (accepted) {
          false_accepts.push_back(name + (m == Mode::Field ? "/field" : "/bit") + " on bundle " + std::to_string(i));
        } else {
          ++rejected;
        }
      }
    }
  }
  std::ostringstream d;
  d << bundles << " bundles x " << classes.size() << " classes x 2 modes: " << rejected << " rejected, "
    << unrepresentable << " not decodable, " << false_accepts.size() << " false accepts";
  if (unchanged) d << ", " << unchanged << " no-op mutations skipped";
  if (!false_accepts.empty()) d << " (first: " << false_accepts.front() << ")";
  return {bundles >= 50 && false_accepts.empty(), d.str()};
}

// ---------------------------------------------------------------------------

Verdict range_brute_force() {
  const auto& params = crypto::default_params();
  const unsigned n = 4;
  int proved = 0, verified = 0, refused = 0, transplant_rejected = 0, transplant_trials = 0, exceptions = 0;
  std::vector<zkp::RangeProof> proofs;
  std::vector<GroupElement> commits;
  for (std::uint64_t x = 0; x < 16; ++x) {
    Scalar r = crypto::hash_to_scalar({as_bytes("brute/" + std::to_string(x))});
    try {
      Transcript tp("brute"), tv("brute");
      auto proof = zkp::prove_range(x, r, n, tp);
      ++proved;
      GroupElement c = params.commit(x, r);
      if (zkp::verify_range(c, proof, n, tv)) ++verified;
      proofs.push_back(proof);
      commits.push_back(c);
    } catch (const Error&) {
      ++exceptions;
    }
  }
  for (std::uint64_t x : {16ull, 17ull, 31ull, 255ull, 1ull << 32, ~0ull}) {
    Transcript tp("brute");
    try {
      zkp::prove_range(x, Scalar::one(), n, tp);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::OutOfRange) {
        ++refused;
      } else {
        ++exceptions;
      }
    }
  }
  // Transplants: each proof against every other commitment, against its own
  // commitment shifted by 16 (an out-of-range opening), and under another
  // transcript domain.
  for (std::size_t i = 0; i < proofs.size(); ++i) {
    auto check = [&](const GroupElement& c, const char* domain) {
      ++transplant_trials;
      try {
        Transcript tv(domain);
        if (!zkp::verify_range(c, proofs[i], n, tv)) ++transplant_rejected;
      } catch (const Error&) {
        ++exceptions;
      }
    };
    for (std::size_t j = 0; j < commits.size(); ++j) {
      if (j != i) check(commits[j], "brute");
    }
    check(commits[i] + crypto::default_params().value_term(Scalar::from_u64(16)), "brute");
    check(commits[i], "brute/other");
  }
  std::ostringstream d;
  d << proved << "/16 proved, " << verified << "/16 verified, " << refused << "/6 out-of-range refused, "
    << transplant_rejected << "/" << transplant_trials << " transplants rejected, " << exceptions << " exceptions";
  return {proved == 16 && verified == 16 && refused == 6 && transplant_rejected == transplant_trials &&
              exceptions == 0,
          d.str()};
}

// ---------------------------------------------------------------------------

// One rollback attack: some honest traffic, a snapshot, a payment, a restore
// and a second payment spending the same counter.
bool rollback_detected(std::uint64_t seed) {
  sim::Simulator s(seed);
  world(s, 3000);
  std::mt19937_64 rng(seed);
  auto nfc = channel::ChannelProfile::nfc();
  std::string attacker = kDevices[rng() % 4];
  auto victim = [&] {
    std::string to;
    do {
      to = kDevices[rng() % 4];
    } while (to == attacker);
    return to;
  };
  if (rng() % 2) s.pay(attacker, victim(), 1 + rng() % 200, nfc);
  s.snapshot(attacker);
  s.pay(attacker, victim(), 1 + rng() % 1500, nfc);
  s.restore(attacker);
  s.pay(attacker, victim(), 1 + rng() % 1500, nfc);
  s.advance_epoch(1);
  s.sync();
  return s.double_spend_count() == 1 && s.fi().is_frozen(s.device(attacker).se().device_id()) &&
         ledger::conservation_check(s.fi().ledger(), s.omniscient()).ok;
}

bool honest_false_positive(std::uint64_t seed) {
  sim::Simulator s(seed);
  world(s, 3000);
  std::mt19937_64 rng(seed);
  auto nfc = channel::ChannelProfile::nfc();
  for (int i = 0; i < 3; ++i) {
    std::string from = kDevices[rng() % 4];
    std::string to;
    do {
      to = kDevices[rng() % 4];
    } while (to == from);
    s.pay(from, to, 1 + rng() % 1500, nfc);
  }
  s.advance_epoch(1);
  const auto& r = s.sync();
  return s.double_spend_count() != 0 || !r.report.held.empty() || !s.fi().frozen_devices().empty();
}

Verdict double_spend_detection() {
  int detected = 0, false_positives = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) detected += rollback_detected(1000 + seed);
  for (std::uint64_t seed = 1; seed <= 200; ++seed) false_positives += honest_false_positive(5000 + seed);
  std::ostringstream d;
  d << detected << "/200 attacks detected, " << false_positives << "/200 honest false positives";
  return {detected == 200 && false_positives == 0, d.str()};
}

// ---------------------------------------------------------------------------

Verdict conservation(const std::string& dir) {
  int scenarios = 0, clean = 0;
  std::uint64_t ticks = 0;
  std::string first_bad;
  for (const auto& path : scenario_files(dir)) {
    json sc = sim::load_scenario_file(path.string());
    if (!is_honest(sc)) continue;
    ++scenarios;
    auto r = sim::run_scenario(sc).report;
    const json& c = r["conservation"];
    bool ok = c["failures"] == 0 && c["final_ok"] == true && c["checks"].get<std::uint64_t>() > 0;
    ticks += c["checks"].get<std::uint64_t>();
    if (ok) {
      ++clean;
    } else if (first_bad.empty()) {
      first_bad = path.filename().string();
    }
  }
  std::ostringstream d;
  d << clean << "/" << scenarios << " honest scenarios exact at all " << ticks << " ticks";
  if (!first_bad.empty()) d << " (first failure: " << first_bad << ")";
  return {scenarios > 0 && clean == scenarios, d.str()};
}

// ---------------------------------------------------------------------------

std::uint64_t holdings(const sim::Simulator& s, const std::string& wallet) {
  std::uint64_t total = s.wallet_balance(wallet);
  for (const auto& d : kDevices) {
    if (owner_of(d) == wallet) total += s.device_state(d).balance;
  }
  return total;
}

// Debited once xor voided-and-recredited, credited at most once, and the
// holdings of both owners moved accordingly.
std::optional<std::string> atomicity_violation(std::uint64_t seed, const std::map<std::uint64_t, channel::Fault>& plan) {
  sim::Simulator s(seed);
  world(s, 3000);
  std::mt19937_64 rng(seed);
  std::string from = kDevices[rng() % 4];
  std::string to;
  do {
    to = kDevices[rng() % 4];
  } while (to == from || owner_of(to) == owner_of(from));
  std::uint64_t amount = 1 + rng() % 1500;
  auto payer_before = holdings(s, owner_of(from));
  auto payee_before = holdings(s, owner_of(to));
  const auto& p = s.pay(from, to, amount, channel::ChannelProfile::nfc(), {}, plan);
  if (p.refused) return "payment refused: " + *p.refused;
  Hash32 bundle = *p.bundle_hash;
  s.advance_epoch(1);
  s.sync();

  int credited = 0, voided = 0, held = 0;
  for (const auto& t : s.fi().transfers()) {
    if (t.bundle_hash != bundle) continue;
    credited += t.settlement == fi::Settlement::Credited;
    voided += t.settlement == fi::Settlement::Voided;
    held += t.settlement == fi::Settlement::Held;
  }
  if (held) return std::string("transfer held");
  if (credited + voided != 1) {
    return "credited " + std::to_string(credited) + ", voided " + std::to_string(voided);
  }
  auto payer_after = holdings(s, owner_of(from));
  auto payee_after = holdings(s, owner_of(to));
  std::uint64_t moved = credited ? amount : 0;
  if (payer_before - payer_after != moved || payee_after - payee_before != moved) return std::string("holdings moved wrongly");
  if (s.conservation().failures != 0) return std::string("conservation failed during the run");
  return std::nullopt;
}

Verdict fault_atomicity() {
  using channel::Fault;
  using channel::FaultKind;
  struct Plan {
    std::string name;
    std::function<std::map<std::uint64_t, Fault>(std::uint64_t)> faults;
  };
  std::vector<Plan> plans{
      {"drop-init", [](std::uint64_t) { return std::map<std::uint64_t, Fault>{{0, {FaultKind::Drop, 0}}}; }},
      {"drop-accept", [](std::uint64_t) { return std::map<std::uint64_t, Fault>{{1, {FaultKind::Drop, 0}}}; }},
      {"drop-commit", [](std::uint64_t) { return std::map<std::uint64_t, Fault>{{2, {FaultKind::Drop, 0}}}; }},
      {"corrupt", [](std::uint64_t s) { return std::map<std::uint64_t, Fault>{{s % 3, {FaultKind::Corrupt, 0}}}; }},
      {"duplicate", [](std::uint64_t s) { return std::map<std::uint64_t, Fault>{{s % 3, {FaultKind::Duplicate, 0}}}; }},
  };
  std::ostringstream d;
  bool all = true;
  for (const auto& plan : plans) {
    int ok = 0;
    std::string first;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      auto v = atomicity_violation(9000 + seed, plan.faults(seed));
      if (!v) {
        ++ok;
      } else if (first.empty()) {
        first = *v;
      }
    }
    all = all && ok == 50;
    d << plan.name << " " << ok << "/50";
    if (!first.empty()) d << " (" << first << ")";
    if (&plan != &plans.back()) d << ", ";
  }
  return {all, d.str()};
}

// ---------------------------------------------------------------------------

Verdict log_tamper_evidence() {
  sim::Simulator s(77);
  world(s, 3000);
  auto nfc = channel::ChannelProfile::nfc();
  s.pay("a1", "b1", 400, nfc);
  s.pay("b2", "a1", 150, nfc);
  const auto& se = s.device("a1").se();
  const auto& log = se.log();
  if (log.size() != 3) return {false, "expected a 3-entry log, got " + std::to_string(log.size())};

  // Serialized log: entry count, entries, head.
  ByteWriter w;
  w.count(log.size());
  for (const auto& e : log) e.encode(w);
  w.raw(se.log_head());
  const Bytes original = w.bytes();
  auto verify = [&](const Bytes& bytes) {
    ByteReader r(bytes);
    std::vector<se::OfflineLogEntry> entries(r.count());
    for (auto& e : entries) e = se::OfflineLogEntry::decode(r);
    Hash32 head = r.fixed<32>();
    r.expect_end();
    return se::verify_log_chain(entries, head, se.public_key());
  };
  if (!verify(original)) return {false, "untampered log does not verify"};

  std::uint64_t trials = 0, verify_false = 0, decode_refused = 0, accepted = 0;
  for (std::size_t pos = 0; pos < original.size(); ++pos) {
    for (unsigned mask : {0xffu, 0x01u, 0x02u, 0x04u, 0x08u, 0x10u, 0x20u, 0x40u, 0x80u}) {
      Bytes m = original;
      m[pos] ^= static_cast<std::uint8_t>(mask);
      ++trials;
      try {
        if (verify(m)) {
          ++accepted;
        } else {
          ++verify_false;
        }
      } catch (const Error&) {
        ++decode_refused;
      }
    }
  }
  std::ostringstream d;
  d << original.size() << " bytes x 9 flips: " << verify_false << " chain false, " << decode_refused
    << " undecodable, " << accepted << " verified";
  return {accepted == 0 && trials == verify_false + decode_refused, d.str()};
}

// ---------------------------------------------------------------------------

Verdict determinism(const std::string& dir) {
  int same = 0, total = 0;
  std::string first_diff;
  for (const auto& path : scenario_files(dir)) {
    json sc = sim::load_scenario_file(path.string());
    ++total;
    auto a = sim::dump_report(sim::without_timing(sim::run_scenario(sc).report));
    auto b = sim::dump_report(sim::without_timing(sim::run_scenario(sc).report));
    if (a == b) {
      ++same;
    } else if (first_diff.empty()) {
      first_diff = path.filename().string();
    }
  }
  std::ostringstream d;
  d << same << "/" << total << " bundled scenarios byte-identical";
  if (!first_diff.empty()) d << " (first difference: " << first_diff << ")";
  return {total > 0 && same == total, d.str()};
}

// ---------------------------------------------------------------------------

Verdict range_budget() {
  const auto& params = crypto::default_params();
  const int runs = 20;
  std::mt19937_64 rng(32);
  double prove_max = 0, verify_max = 0, prove_sum = 0, verify_sum = 0;
  bool all_verified = true, sizes_ok = true;
  std::size_t size = 0;
  for (int i = 0; i < runs; ++i) {
    std::uint64_t x = rng() & 0xffffffffu;
    Scalar r = crypto::hash_to_scalar({as_bytes("budget/" + std::to_string(i))});
    GroupElement c = params.commit(x, r);
    Transcript tp("budget"), tv("budget");
    auto t0 = std::chrono::steady_clock::now();
    auto proof = zkp::prove_range(x, r, zkp::kAmountBits, tp);
    double p = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    bool ok = zkp::verify_range(c, proof, zkp::kAmountBits, tv);
    double v = ms_since(t0);
    all_verified = all_verified && ok;
    size = proof.size_bytes();
    sizes_ok = sizes_ok && size == zkp::range_proof_analytic_size(zkp::kAmountBits);
    prove_max = std::max(prove_max, p);
    verify_max = std::max(verify_max, v);
    prove_sum += p;
    verify_sum += v;
  }
  std::ostringstream d;
  d << "n=32 over " << runs << " proofs: prove max " << prove_max << " ms (mean " << prove_sum / runs
    << "), verify max " << verify_max << " ms (mean " << verify_sum / runs << "), size " << size
    << " bytes vs analytic " << zkp::range_proof_analytic_size(zkp::kAmountBits);
  return {all_verified && sizes_ok && prove_max < 100.0 && verify_max < 50.0, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  std::string scenarios = "scenarios";
  std::vector<std::string> only;
  app.add_option("--scenarios", scenarios, "Directory of bundled scenarios");
  app.add_option("--only", only, "Run only these criteria (by id)");
  CLI11_PARSE(app, argc, argv);

  struct Criterion {
    std::string id;
    std::function<Verdict()> run;
  };
  std::vector<Criterion> criteria{
      {"zkp-completeness", zkp_completeness},
      {"zkp-soundness", zkp_soundness},
      {"range-brute-force", range_brute_force},
      {"double-spend-detection", double_spend_detection},
      {"conservation", [&] { return conservation(scenarios); }},
      {"fault-atomicity", fault_atomicity},
      {"log-tamper-evidence", log_tamper_evidence},
      {"determinism", [&] { return determinism(scenarios); }},
      {"range-proof-budget", range_budget},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    Verdict v;
    auto t0 = std::chrono::steady_clock::now();
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (v.pass ? "PASS " : "FAIL ") << c.id << ": " << v.detail << " [" << seconds_since(t0) << " s]"
              << std::endl;
    failed += !v.pass;
  }
  return failed == 0 ? 0 : 1;
}
