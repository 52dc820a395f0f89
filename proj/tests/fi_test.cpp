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

#include <gtest/gtest.h>

#include "cbdc/fi/intermediary.hpp"
#include "cbdc/sim/simulator.hpp"
#include "support/expect_error.hpp"
#include "support/sim_world.hpp"

using namespace cbdc;
using cbdc::testing::code_of;
using cbdc::testing::two_wallets;

namespace {

crypto::KeyPair keys(const std::string& tag) { return crypto::KeyPair::derive(as_bytes(tag)); }

std::size_t count_settled(const fi::Intermediary& fi, fi::Settlement s) {
  std::size_t n = 0;
  for (const auto& t : fi.transfers()) n += t.settlement == s;
  return n;
}

}  // namespace

TEST(Onboarding, OwnerIdIsStableAndSanctionsDeny) {
  fi::Intermediary fi(keys("fi"));
  auto a = fi.onboard_customer(R"({"name":"Alice","country":"NL"})");
  auto b = fi.onboard_customer(R"({"name":"Alice"})");
  ASSERT_TRUE(a && b);
  EXPECT_EQ(a->owner_id, b->owner_id);
  EXPECT_EQ(a->identity, "Alice");
  EXPECT_FALSE(fi.onboard_customer(R"({"name":"Mallory","sanctioned":true})"));
  EXPECT_TRUE(fi.customer(a->owner_id).has_value());
}

TEST(Onboarding, MalformedDocumentsAreDecodeErrors) {
  fi::Intermediary fi(keys("fi"));
  for (const char* doc : {"", "[]", "{", R"({"name":""})", R"({"name":5})",
                          R"({"name":"x","sanctioned":"yes"})"}) {
    EXPECT_EQ(code_of([&] { fi.onboard_customer(doc); }), ErrorCode::DecodeError) << doc;
  }
}

TEST(Certificates, IssuanceChecks) {
  fi::Intermediary fi(keys("fi"));
  auto alice = *fi.onboard_customer(R"({"name":"Alice"})");
  auto bob = *fi.onboard_customer(R"({"name":"Bob"})");
  auto dev = keys("device");
  zkp::Limits ok{10000, 2000, 64};

  wallet::OwnerId nobody{};
  EXPECT_EQ(code_of([&] { fi.issue_certificate(nobody, dev.pk, ok, 10); }), ErrorCode::UnknownCustomer);
  EXPECT_EQ(code_of([&] { fi.issue_certificate(alice.owner_id, dev.pk, {zkp::kAmountBound, 1, 1}, 10); }),
            ErrorCode::PolicyBound);

  auto cert = fi.issue_certificate(alice.owner_id, dev.pk, ok, 10);
  EXPECT_TRUE(cert.verify(fi.public_key()));
  EXPECT_EQ(cert.subject_pk, dev.pk);
  EXPECT_EQ(code_of([&] { fi.issue_certificate(bob.owner_id, dev.pk, ok, 10); }),
            ErrorCode::ProvisionMismatch);
  EXPECT_NO_THROW(fi.issue_certificate(alice.owner_id, dev.pk, ok, 20));
}

TEST(Issuance, TotalsAndChain) {
  fi::Intermediary fi(keys("fi"));
  auto alice = *fi.onboard_customer(R"({"name":"Alice"})");
  wallet::MainWallet w(alice.owner_id, keys("alice"));
  EXPECT_EQ(code_of([&] { fi.issue_cbdc(w, 0); }), ErrorCode::ValueInvalid);
  wallet::MainWallet stranger(wallet::OwnerId{}, keys("x"));
  EXPECT_EQ(code_of([&] { fi.issue_cbdc(stranger, 5); }), ErrorCode::UnknownCustomer);

  fi.issue_cbdc(w, 700);
  const auto& e = fi.issue_cbdc(w, 300);
  EXPECT_EQ(e.index, 1u);
  EXPECT_EQ(e.kind, ledger::EntryKind::Issuance);
  EXPECT_EQ(fi.ledger().total_issued(), 1000u);
  EXPECT_EQ(w.online_balance(), 1000u);
  EXPECT_TRUE(fi.ledger().verify_chain());
}

TEST(Reconcile, EmptyInputLeavesLedgerUnchanged) {
  fi::Intermediary fi(keys("fi"));
  auto head = fi.ledger().head();
  auto r = fi.reconcile({}, 1);
  EXPECT_TRUE(r.report.empty());
  EXPECT_TRUE(r.acks.empty());
  EXPECT_EQ(fi.ledger().head(), head);
  EXPECT_EQ(fi.ledger().size(), 0u);
}

TEST(Reconcile, HonestPaymentsCreditPayees) {
  sim::Simulator s(11);
  two_wallets(s);
  auto nfc = channel::ChannelProfile::nfc();
  s.pay("alice-phone", "bob-watch", 1200, nfc);
  s.pay("alice-phone", "bob-watch", 300, nfc);
  s.pay("bob-watch", "alice-phone", 100, nfc);
  s.advance_epoch(1);
  const auto& rec = s.sync();
  EXPECT_EQ(rec.report.credits.size(), 3u);
  EXPECT_EQ(rec.report.debits.size(), 3u);
  EXPECT_TRUE(rec.report.double_spends.empty());
  EXPECT_TRUE(rec.report.rejected_entries.empty());
  EXPECT_EQ(s.wallet_balance("alice"), 6000u + 100);
  EXPECT_EQ(s.wallet_balance("bob"), 1500u + 1500);
  EXPECT_EQ(s.fi().ledger().size(), 3u);
  EXPECT_EQ(s.fi().ledger().entries().back().kind, ledger::EntryKind::Reconciliation);
  EXPECT_EQ(s.fi().ledger().entries().back().amount_delta, 1600);
  EXPECT_TRUE(s.conservation().failures == 0);

  const auto& again = s.sync();
  EXPECT_TRUE(again.report.empty());
  EXPECT_EQ(s.fi().ledger().size(), 3u);
}

TEST(Reconcile, RollbackIsDetectedAndPayerFrozen) {
  sim::Simulator s(12);
  two_wallets(s);
  auto nfc = channel::ChannelProfile::nfc();
  s.snapshot("alice-phone");
  s.pay("alice-phone", "bob-watch", 1500, nfc);
  s.restore("alice-phone");
  s.pay("alice-phone", "bob-card", 1500, nfc);
  EXPECT_GT(s.conservation().failures, 0u);  // the oracle sees minted value before reconciliation
  s.advance_epoch(1);
  const auto& rec = s.sync();
  ASSERT_EQ(rec.report.double_spends.size(), 1u);
  const auto& ds = rec.report.double_spends[0];
  EXPECT_EQ(ds.tx_ids.size(), 2u);
  EXPECT_EQ(ds.bundle_hashes.size(), 2u);
  EXPECT_EQ(ds.device, s.device_pseudonym("alice-phone"));
  EXPECT_EQ(rec.report.held.size(), 1u);
  EXPECT_EQ(rec.report.credits.size(), 1u);
  EXPECT_EQ(s.fi().frozen_devices().size(), 1u);
  EXPECT_TRUE(ledger::conservation_check(s.fi().ledger(), s.omniscient()).ok);

  // Later spending from the frozen device is held.
  s.pay("alice-phone", "bob-watch", 100, nfc);
  s.advance_epoch(1);
  const auto& later = s.sync();
  ASSERT_EQ(later.report.held.size(), 1u);
  EXPECT_EQ(later.report.held[0].reason, "PayerFrozen");
  EXPECT_EQ(s.double_spend_count(), 1u);
  EXPECT_EQ(count_settled(s.fi(), fi::Settlement::Held), 2u);
}

TEST(Reconcile, RollbackToSamePayeeIsDetectedThroughTheVoid) {
  sim::Simulator s(13);
  two_wallets(s);
  auto nfc = channel::ChannelProfile::nfc();
  s.snapshot("alice-phone");
  s.pay("alice-phone", "bob-watch", 900, nfc);
  s.restore("alice-phone");
  const auto& p = s.pay("alice-phone", "bob-watch", 900, nfc);
  EXPECT_EQ(p.payee_reject, zkp::RejectReason::DuplicateTx);
  s.advance_epoch(1);
  EXPECT_EQ(s.sync().report.double_spends.size(), 1u);
  EXPECT_TRUE(ledger::conservation_check(s.fi().ledger(), s.omniscient()).ok);
}

TEST(Audit, GrantScopesAndForgery) {
  sim::Simulator s(14);
  two_wallets(s);
  const auto& p = s.pay("alice-phone", "bob-watch", 250, channel::ChannelProfile::nfc());
  Bytes tx(p.tx_id->begin(), p.tx_id->end());
  Bytes nf(p.nullifier->begin(), p.nullifier->end());
  s.advance_epoch(1);
  s.sync();

  auto ok = s.audit(fi::ScopeKind::TxId, tx, false);
  ASSERT_TRUE(ok["error"].is_null());
  ASSERT_EQ(ok["disclosures"].size(), 1u);
  EXPECT_EQ(ok["disclosures"][0]["owner_identity"], "Alice");
  EXPECT_EQ(ok["disclosures"][0]["amount"], 250);
  EXPECT_EQ(s.audit(fi::ScopeKind::Nullifier, nf, false)["disclosures"].size(), 1u);
  auto pseud = s.device_pseudonym("alice-phone");
  EXPECT_EQ(s.audit(fi::ScopeKind::DevicePseudonym, Bytes(pseud.begin(), pseud.end()), false)["disclosures"].size(),
            1u);

  EXPECT_EQ(s.audit(fi::ScopeKind::TxId, tx, true)["error"], "GrantInvalid");
  Bytes unknown(32, 0x5a);
  EXPECT_EQ(s.audit(fi::ScopeKind::TxId, unknown, false)["error"], "ScopeUnknown");
}
