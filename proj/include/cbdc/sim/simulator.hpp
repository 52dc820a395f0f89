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
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cbdc/channel/transport.hpp"
#include "cbdc/fi/intermediary.hpp"
#include "cbdc/ledger/ledger.hpp"
#include "cbdc/protocol/device.hpp"
#include "cbdc/se/rollback_harness.hpp"
#include "cbdc/wallet/main_wallet.hpp"
#include "json.hpp"

namespace cbdc::sim {

struct DeviceSpec {
  std::string name;
  zkp::Limits limits{10000, 2000, 64};
  std::uint64_t expiry_epoch = 100;
};

struct WalletSpec {
  std::string name;
  std::string kyc_doc;  // JSON text handed to onboarding
  std::vector<DeviceSpec> devices;
};

// Everything observed about one payment attempt. Timings live apart so
// that the rest is reproducible.
struct PaymentRecord {
  std::uint64_t index = 0;
  std::string payer;
  std::string payee;
  std::uint64_t amount = 0;
  std::string profile;
  std::optional<std::string> refused;  // SE refusal; nothing was sent
  std::optional<zkp::TxId> tx_id;
  std::optional<Hash32> bundle_hash;
  std::optional<zkp::Nullifier> nullifier;
  std::optional<protocol::PaymentStatus> payer_status;
  std::optional<protocol::PaymentStatus> payee_status;
  std::optional<zkp::RejectReason> payee_reject;
  std::uint64_t start_tick = 0;
  std::optional<std::uint64_t> latency_ticks;  // start to payer terminal status
  std::uint64_t proof_bytes = 0;
  std::uint64_t range_proof_bytes = 0;
  std::vector<nlohmann::json> trace;  // ordered delivery events
  double prove_ms = 0;
  double verify_ms = 0;
};

struct SyncRecord {
  std::uint64_t round = 0;
  std::uint64_t tick = 0;
  std::uint64_t epoch = 0;
  std::vector<std::string> wallets;
  std::size_t entries = 0;
  std::size_t acked_segments = 0;
  fi::ReconciliationReport report;
  std::vector<std::uint64_t> settle_delay_ticks;
  double reconcile_ms = 0;
};

struct ConservationLog {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::optional<std::uint64_t> first_failure_tick;
  std::int64_t first_failure_discrepancy = 0;
  ledger::ConservationResult last;
};

// Deterministic world: one FI, its ledger, main wallets, devices and the
// channel. A tick clock drives payments; the conservation oracle runs at
// every tick.
class Simulator {
 public:
  explicit Simulator(std::uint64_t seed, std::uint64_t timeout_ticks = protocol::kDefaultTimeoutTicks);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t now_tick() const { return tick_; }
  std::uint64_t epoch() const { return epoch_; }

  void declare_wallet(const WalletSpec& spec);
  void declare_auditor();
  bool has_wallet(const std::string& name) const { return wallets_.contains(name); }
  bool has_device(const std::string& name) const { return devices_.contains(name); }

  // KYC plus certificates and provisioning for the wallet's devices.
  // Denied if KYC refuses the customer.
  void onboard(const std::string& wallet);
  void issue(const std::string& wallet, std::uint64_t amount);
  void allocate(const std::string& wallet, const std::string& device, std::uint64_t amount);
  std::uint64_t reclaim(const std::string& device);

  // Runs one offline exchange over a fresh channel session until both
  // sides are quiescent.
  // The fault plan is seeded from (scenario seed, payment index); overrides
  // pin faults to frame indices of this exchange.
  const PaymentRecord& pay(const std::string& from, const std::string& to, std::uint64_t amount,
                           const channel::ChannelProfile& profile,
                           const channel::FaultRates& rates = {},
                           const std::map<std::uint64_t, channel::Fault>& overrides = {});

  void snapshot(const std::string& device);
  void restore(const std::string& device);
  void advance_epoch(std::uint64_t by);

  // Empty list means every onboarded wallet in declaration order.
  const SyncRecord& sync(std::vector<std::string> wallets = {});

  // Disclosures for the scope, or the refusal code.
  nlohmann::json audit(fi::ScopeKind kind, const Bytes& value, bool forged);

  // Advances the clock by one tick and runs the oracle.
  void step_tick();

  ledger::OmniscientState omniscient() const;
  const ConservationLog& conservation() const { return conservation_; }
  const std::vector<PaymentRecord>& payments() const { return payments_; }
  const std::vector<SyncRecord>& syncs() const { return syncs_; }
  const fi::Intermediary& fi() const { return fi_; }

  std::uint64_t wallet_balance(const std::string& wallet) const;
  se::SeInspection device_state(const std::string& device) const;
  const protocol::Device& device(const std::string& name) const;
  fi::Pseudonym device_pseudonym(const std::string& name) const;
  std::uint64_t double_spend_count() const;
  std::vector<std::string> device_names() const;
  std::vector<std::string> wallet_names() const { return wallet_order_; }

 private:
  struct WalletActor {
    WalletSpec spec;
    std::unique_ptr<wallet::MainWallet> wallet;
    bool onboarded = false;
  };
  struct DeviceActor {
    std::string wallet;
    DeviceSpec spec;
    std::unique_ptr<protocol::Device> device;
    se::RollbackHarness harness;
    std::int64_t restore_gain = 0;
  };

  WalletActor& wallet_actor(const std::string& name);
  DeviceActor& device_actor(const std::string& name);
  const DeviceActor& device_actor(const std::string& name) const;
  crypto::KeyPair derive_keys(std::string_view role, std::string_view name) const;
  void check_conservation();

  std::uint64_t seed_;
  std::uint64_t timeout_ticks_;
  std::uint64_t tick_ = 0;
  std::uint64_t epoch_ = 0;
  crypto::KeyPair fi_keys_;
  fi::Intermediary fi_;
  std::optional<crypto::KeyPair> auditor_;

  std::map<std::string, WalletActor> wallets_;
  std::vector<std::string> wallet_order_;
  std::map<std::string, DeviceActor> devices_;
  std::map<se::DeviceId, std::string> device_by_id_;

  std::uint64_t total_debited_ = 0;
  std::map<zkp::TxId, std::uint64_t> start_tick_by_tx_;
  std::vector<PaymentRecord> payments_;
  std::vector<SyncRecord> syncs_;
  ConservationLog conservation_;
};

}  // namespace cbdc::sim
