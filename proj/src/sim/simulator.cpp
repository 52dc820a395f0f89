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

#include "cbdc/sim/simulator.hpp"

#include <chrono>
#include <queue>
#include <set>

#include "cbdc/common/error.hpp"
#include "cbdc/crypto/hash.hpp"

namespace cbdc::sim {

namespace {

constexpr std::uint64_t kTicksPerEpoch = 100;

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

struct Event {
  std::uint64_t tick = 0;
  std::uint64_t seq = 0;
  bool to_payee = true;
  channel::Delivery delivery;

  bool operator>(const Event& o) const {
    return tick != o.tick ? tick > o.tick : seq > o.seq;
  }
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  ByteWriter w;
  w.raw("fault-seed/v1").u64(seed).u64(index);
  Hash32 h = crypto::sha256(w.bytes());
  std::uint64_t out = 0;
  for (int i = 0; i < 8; ++i) out = (out << 8) | h[i];
  return out;
}

}  // namespace

Simulator::Simulator(std::uint64_t seed, std::uint64_t timeout_ticks)
    : seed_(seed),
      timeout_ticks_(timeout_ticks),
      fi_keys_(derive_keys("fi", "fi")),
      fi_(fi_keys_) {}

crypto::KeyPair Simulator::derive_keys(std::string_view role, std::string_view name) const {
  ByteWriter w;
  w.raw("sim/v1").u64(seed_).var(role).var(name);
  return crypto::KeyPair::derive(w.bytes());
}

void Simulator::declare_wallet(const WalletSpec& spec) {
  if (wallets_.contains(spec.name)) fail(ErrorCode::ScenarioInvalid, "duplicate wallet " + spec.name);
  for (const auto& d : spec.devices) {
    if (devices_.contains(d.name)) fail(ErrorCode::ScenarioInvalid, "duplicate device " + d.name);
    devices_[d.name] = DeviceActor{spec.name, d, nullptr, {}, 0};
  }
  wallets_[spec.name] = WalletActor{spec, nullptr, false};
  wallet_order_.push_back(spec.name);
}

void Simulator::declare_auditor() {
  auditor_ = derive_keys("auditor", "auditor");
  fi_.register_auditor(auditor_->pk);
}

Simulator::WalletActor& Simulator::wallet_actor(const std::string& name) {
  auto it = wallets_.find(name);
  if (it == wallets_.end()) fail(ErrorCode::ScenarioInvalid, "unknown wallet " + name);
  return it->second;
}

Simulator::DeviceActor& Simulator::device_actor(const std::string& name) {
  auto it = devices_.find(name);
  if (it == devices_.end()) fail(ErrorCode::ScenarioInvalid, "unknown device " + name);
  return it->second;
}

const Simulator::DeviceActor& Simulator::device_actor(const std::string& name) const {
  auto it = devices_.find(name);
  if (it == devices_.end()) fail(ErrorCode::ScenarioInvalid, "unknown device " + name);
  return it->second;
}

void Simulator::onboard(const std::string& name) {
  WalletActor& w = wallet_actor(name);
  if (w.onboarded) return;
  auto record = fi_.onboard_customer(w.spec.kyc_doc);
  if (!record) fail(ErrorCode::Denied, "KYC refused " + name);

  crypto::KeyPair wallet_keys = derive_keys("wallet", name);
  w.wallet = std::make_unique<wallet::MainWallet>(record->owner_id, wallet_keys);
  for (const auto& spec : w.spec.devices) {
    DeviceActor& d = device_actor(spec.name);
    crypto::KeyPair keys = derive_keys("device", spec.name);
    zkp::WalletCertificate cert =
        fi_.issue_certificate(record->owner_id, keys.pk, spec.limits, spec.expiry_epoch);
    ByteWriter prf;
    prf.raw("sim-prf/v1").u64(seed_).var(spec.name);
    se::SecureElement se = se::SecureElement::provision(
        cert, keys, crypto::sha256(prf.bytes()), {spec.limits, spec.expiry_epoch}, wallet_keys.pk,
        fi_.public_key());
    device_by_id_[se.device_id()] = spec.name;
    w.wallet->register_device(se.device_id());
    d.device = std::make_unique<protocol::Device>(spec.name, std::move(se), fi_.public_key(),
                                                  timeout_ticks_);
  }
  w.onboarded = true;
}

void Simulator::issue(const std::string& name, std::uint64_t amount) {
  WalletActor& w = wallet_actor(name);
  if (!w.onboarded) fail(ErrorCode::UnknownCustomer, name + " is not onboarded");
  fi_.issue_cbdc(*w.wallet, amount);
}

void Simulator::allocate(const std::string& wallet, const std::string& device, std::uint64_t amount) {
  WalletActor& w = wallet_actor(wallet);
  DeviceActor& d = device_actor(device);
  if (!w.onboarded || !d.device) fail(ErrorCode::UnknownDevice, device + " is not provisioned");
  w.wallet->allocate_to_subwallet(d.device->se().device_id(), amount, d.device->se());
}

std::uint64_t Simulator::reclaim(const std::string& device) {
  DeviceActor& d = device_actor(device);
  WalletActor& w = wallet_actor(d.wallet);
  if (!w.onboarded || !d.device) fail(ErrorCode::UnknownDevice, device + " is not provisioned");
  return w.wallet->reclaim_from_subwallet(d.device->se().device_id(), d.device->se());
}

const PaymentRecord& Simulator::pay(const std::string& from, const std::string& to,
                                    std::uint64_t amount, const channel::ChannelProfile& profile,
                                    const channel::FaultRates& rates,
                                    const std::map<std::uint64_t, channel::Fault>& overrides) {
  DeviceActor& a = device_actor(from);
  DeviceActor& b = device_actor(to);
  if (from == to) fail(ErrorCode::ScenarioInvalid, "payer and payee are the same device");
  if (!a.device || !b.device) fail(ErrorCode::UnknownDevice, "payment between unprovisioned devices");
  protocol::Device& payer = *a.device;
  protocol::Device& payee = *b.device;

  PaymentRecord rec;
  rec.index = payments_.size();
  rec.payer = from;
  rec.payee = to;
  rec.amount = amount;
  rec.profile = profile.name;
  rec.start_tick = tick_;

  protocol::PayInit init;
  auto t0 = std::chrono::steady_clock::now();
  try {
    init = payer.payer_start(amount, epoch_, tick_, payee.se().device_id());
  } catch (const Error& e) {
    rec.refused = std::string(to_string(e.code()));
    payments_.push_back(std::move(rec));
    step_tick();
    return payments_.back();
  }
  rec.prove_ms = ms_since(t0);
  rec.tx_id = init.tx_id;
  rec.bundle_hash = init.bundle.hash();
  rec.nullifier = init.bundle.nullifier;
  rec.proof_bytes = init.bundle.proof_bytes();
  rec.range_proof_bytes = init.bundle.range_balance.size_bytes();
  total_debited_ += amount;
  start_tick_by_tx_[init.tx_id] = tick_;

  channel::ChannelConfig config{profile, channel::FaultPlan(mix_seed(seed_, rec.index), rates)};
  for (const auto& [frame, fault] : overrides) config.fault_plan.set(frame, fault);
  std::priority_queue<Event, std::vector<Event>, std::greater<>> queue;
  std::uint64_t next_frame = 0;
  std::uint64_t seq = 0;
  auto send = [&](bool to_payee, const protocol::Message& msg) {
    auto deliveries = channel::transmit(protocol::encode_message(msg), next_frame, config, tick_);
    if (deliveries.empty()) {
      rec.trace.push_back({{"tick", tick_},
                           {"frame", next_frame},
                           {"to", to_payee ? "payee" : "payer"},
                           {"fault", channel::to_string(config.fault_plan.fault_for(next_frame).kind)},
                           {"chunks", 0},
                           {"result", "lost"}});
    }
    for (auto& d : deliveries) queue.push({d.tick, seq++, to_payee, std::move(d)});
    ++next_frame;
  };
  auto trace = [&](const Event& ev, std::string what) {
    rec.trace.push_back({{"tick", ev.tick},
                         {"frame", ev.delivery.frame_index},
                         {"to", ev.to_payee ? "payee" : "payer"},
                         {"fault", channel::to_string(ev.delivery.fault)},
                         {"chunks", ev.delivery.chunk_count},
                         {"result", std::move(what)}});
  };
  auto settle_outcomes = [&](const std::vector<protocol::SideOutcome>& outs, bool is_payer_dev) {
    for (const auto& o : outs) {
      if (o.side == protocol::Side::Payer && is_payer_dev && !rec.payer_status) {
        rec.payer_status = o.outcome.status;
        rec.latency_ticks = tick_ - rec.start_tick;
      } else if (o.side == protocol::Side::Payee && !is_payer_dev && !rec.payee_status) {
        rec.payee_status = o.outcome.status;
      }
    }
  };

  send(true, init);
  bool verified_once = false;
  bool payee_accepted = false;
  while (true) {
    while (!queue.empty() && queue.top().tick <= tick_) {
      Event ev = queue.top();
      queue.pop();
      protocol::Message msg;
      try {
        msg = protocol::decode_message(ev.delivery.frame_bytes);
      } catch (const Error& e) {
        trace(ev, std::string(to_string(e.code())));
        continue;
      }
      try {
        if (ev.to_payee && std::holds_alternative<protocol::PayInit>(msg)) {
          auto tv = std::chrono::steady_clock::now();
          auto res = payee.payee_handle_init(std::get<protocol::PayInit>(msg), epoch_, tick_);
          if (!verified_once) {
            rec.verify_ms = ms_since(tv);
            verified_once = true;
          }
          if (auto* acc = std::get_if<protocol::PayAccept>(&res)) {
            trace(ev, "accept");
            payee_accepted = true;
            send(false, *acc);
          } else {
            auto reason = std::get<zkp::RejectReason>(res);
            trace(ev, "reject:" + std::string(zkp::to_string(reason)));
            if (!rec.payee_status && !payee_accepted) {
              rec.payee_status = protocol::PaymentStatus::AbortedReject;
              rec.payee_reject = reason;
            }
          }
        } else if (!ev.to_payee && std::holds_alternative<protocol::PayAccept>(msg)) {
          protocol::PayCommit commit = payer.payer_handle_accept(std::get<protocol::PayAccept>(msg));
          trace(ev, "commit");
          if (!rec.payer_status) {
            rec.payer_status = protocol::PaymentStatus::Completed;
            rec.latency_ticks = tick_ - rec.start_tick;
          }
          send(true, commit);
        } else if (ev.to_payee && std::holds_alternative<protocol::PayCommit>(msg)) {
          payee.payee_handle_commit(std::get<protocol::PayCommit>(msg));
          trace(ev, "receipt");
          if (!rec.payee_status) rec.payee_status = protocol::PaymentStatus::Completed;
        } else {
          trace(ev, "unexpected");
        }
      } catch (const Error& e) {
        trace(ev, std::string(to_string(e.code())));
      }
    }
    settle_outcomes(payer.expire(tick_), true);
    settle_outcomes(payee.expire(tick_), false);
    if (queue.empty() && payer.idle() && payee.idle()) break;
    step_tick();
  }
  payments_.push_back(std::move(rec));
  step_tick();
  return payments_.back();
}

void Simulator::snapshot(const std::string& device) {
  DeviceActor& d = device_actor(device);
  if (!d.device) fail(ErrorCode::UnknownDevice, device + " is not provisioned");
  d.harness.snapshot(d.device->se());
}

void Simulator::restore(const std::string& device) {
  DeviceActor& d = device_actor(device);
  if (!d.device) fail(ErrorCode::UnknownDevice, device + " is not provisioned");
  auto before = static_cast<std::int64_t>(d.device->se().inspect().balance);
  d.harness.restore(d.device->se());
  d.restore_gain += static_cast<std::int64_t>(d.device->se().inspect().balance) - before;
}

void Simulator::advance_epoch(std::uint64_t by) {
  epoch_ += by;
  for (std::uint64_t i = 0; i < by * kTicksPerEpoch; ++i) step_tick();
}

const SyncRecord& Simulator::sync(std::vector<std::string> names) {
  if (names.empty()) {
    for (const auto& n : wallet_order_) {
      if (wallets_.at(n).onboarded) names.push_back(n);
    }
  }
  std::vector<const protocol::Device*> all;
  for (const auto& [name, d] : devices_) {
    if (d.device) all.push_back(d.device.get());
  }

  SyncRecord rec;
  rec.round = syncs_.size();
  rec.tick = tick_;
  rec.epoch = epoch_;
  std::vector<wallet::SyncPayload> payloads;
  std::vector<wallet::MainWallet*> owners;
  for (const auto& n : names) {
    WalletActor& w = wallet_actor(n);
    if (!w.onboarded) fail(ErrorCode::UnknownCustomer, n + " is not onboarded");
    payloads.push_back(w.wallet->collect_sync_payload(all));
    owners.push_back(w.wallet.get());
    rec.entries += payloads.back().entry_count();
  }
  rec.wallets = names;

  std::size_t settled_before = fi_.transfers().size();
  auto t0 = std::chrono::steady_clock::now();
  fi::ReconcileResult result = fi_.reconcile(payloads, epoch_);
  rec.reconcile_ms = ms_since(t0);

  for (const auto& [owner, amount] : result.wallet_credits) {
    for (auto& [n, w] : wallets_) {
      if (w.wallet && w.wallet->owner_id() == owner) w.wallet->credit(amount);
    }
  }
  for (const auto& a : result.acks) {
    const auto& seg = payloads[a.payload_index].segments[a.segment_index];
    owners[a.payload_index]->mark_synced(seg);
    devices_.at(device_by_id_.at(seg.device_id)).device->se().apply_sync_ack(a.ack);
  }
  rec.acked_segments = result.acks.size();
  for (std::size_t i = settled_before; i < fi_.transfers().size(); ++i) {
    auto it = start_tick_by_tx_.find(fi_.transfers()[i].tx_id);
    if (it != start_tick_by_tx_.end()) rec.settle_delay_ticks.push_back(tick_ - it->second);
  }
  rec.report = std::move(result.report);
  syncs_.push_back(std::move(rec));
  step_tick();
  return syncs_.back();
}

nlohmann::json Simulator::audit(fi::ScopeKind kind, const Bytes& value, bool forged) {
  crypto::KeyPair signer = auditor_ && !forged ? *auditor_ : derive_keys("auditor", "forger");
  fi::AuditGrant grant = fi::sign_audit_grant(signer.sk, {kind, value});
  nlohmann::json out;
  out["scope"] = fi::to_string(kind);
  out["forged"] = forged;
  try {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& d : fi_.audit_disclose(grant)) {
      list.push_back({{"tx_id", to_hex(d.tx_id)},
                      {"owner_identity", d.owner_identity},
                      {"amount", d.amount},
                      {"counterparty", d.counterparty}});
    }
    out["disclosures"] = list;
    out["error"] = nullptr;
  } catch (const Error& e) {
    out["disclosures"] = nlohmann::json::array();
    out["error"] = to_string(e.code());
  }
  step_tick();
  return out;
}

ledger::OmniscientState Simulator::omniscient() const {
  ledger::OmniscientState s;
  for (const auto& [n, w] : wallets_) {
    if (w.wallet) s.main_balances += w.wallet->online_balance();
  }
  for (const auto& [n, d] : devices_) {
    if (d.device) s.se_balances += d.device->se().inspect().balance;
  }
  s.unreconciled = total_debited_ - fi_.settled_amount();
  s.held = fi_.held_amount();
  for (const auto& id : fi_.frozen_devices()) {
    auto it = device_by_id_.find(id);
    if (it != device_by_id_.end()) s.detected_counterfeit += devices_.at(it->second).restore_gain;
  }
  return s;
}

void Simulator::check_conservation() {
  conservation_.last = ledger::conservation_check(fi_.ledger(), omniscient());
  conservation_.checks += 1;
  if (!conservation_.last.ok) {
    if (conservation_.failures == 0) {
      conservation_.first_failure_tick = tick_;
      conservation_.first_failure_discrepancy = conservation_.last.discrepancy;
    }
    conservation_.failures += 1;
  }
}

void Simulator::step_tick() {
  check_conservation();
  tick_ += 1;
}

std::uint64_t Simulator::wallet_balance(const std::string& name) const {
  auto it = wallets_.find(name);
  if (it == wallets_.end()) fail(ErrorCode::ScenarioInvalid, "unknown wallet " + name);
  return it->second.wallet ? it->second.wallet->online_balance() : 0;
}

se::SeInspection Simulator::device_state(const std::string& name) const {
  const DeviceActor& d = device_actor(name);
  return d.device ? d.device->se().inspect() : se::SeInspection{};
}

const protocol::Device& Simulator::device(const std::string& name) const {
  const DeviceActor& d = device_actor(name);
  if (!d.device) fail(ErrorCode::UnknownDevice, name + " is not provisioned");
  return *d.device;
}

fi::Pseudonym Simulator::device_pseudonym(const std::string& name) const {
  return fi_.pseudonym(device(name).se().device_id());
}

std::uint64_t Simulator::double_spend_count() const {
  std::set<zkp::Nullifier> seen;
  for (const auto& s : syncs_) {
    for (const auto& d : s.report.double_spends) seen.insert(d.nullifier);
  }
  return seen.size();
}

std::vector<std::string> Simulator::device_names() const {
  std::vector<std::string> out;
  for (const auto& [n, d] : devices_) out.push_back(n);
  return out;
}

}  // namespace cbdc::sim
