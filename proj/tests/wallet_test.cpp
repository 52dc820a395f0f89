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

#include "cbdc/protocol/device.hpp"
#include "cbdc/wallet/main_wallet.hpp"
#include "support/expect_error.hpp"
#include "support/se_fixture.hpp"

using namespace cbdc;
using cbdc::testing::code_of;
using cbdc::testing::SeFixture;

namespace {

wallet::OwnerId owner_id(std::uint8_t tag) {
  wallet::OwnerId id{};
  id[0] = tag;
  return id;
}

struct Owned {
  SeFixture fx;
  wallet::MainWallet wallet;
  protocol::Device device;

  explicit Owned(const std::string& name, std::uint64_t funds = 10000)
      : fx(name),
        wallet(owner_id(name[0]), fx.owner),
        device(name + "-dev", make_se(fx, name), fx.fi.pk) {
    wallet.register_device(device.se().device_id());
    wallet.credit(funds);
  }

  static se::SecureElement make_se(SeFixture& f, const std::string& name) {
    f.prf = crypto::sha256(as_bytes("prf/" + name));
    return f.make();
  }
};

void pay(protocol::Device& from, protocol::Device& to, std::uint64_t amount) {
  auto init = from.payer_start(amount, 1, 0);
  auto res = to.payee_handle_init(init, 1, 0);
  ASSERT_TRUE(std::holds_alternative<protocol::PayAccept>(res));
  to.payee_handle_commit(from.payer_handle_accept(std::get<protocol::PayAccept>(res)));
}

}  // namespace

TEST(MainWallet, AllocateMovesValueIntoTheSe) {
  Owned a("alice");
  a.wallet.allocate_to_subwallet(a.device.se().device_id(), 4000, a.device.se());
  EXPECT_EQ(a.wallet.online_balance(), 6000u);
  EXPECT_EQ(a.device.se().inspect().balance, 4000u);
  EXPECT_EQ(a.wallet.allocated_to(a.device.se().device_id()), 4000u);
}

TEST(MainWallet, AllocationFailuresLeaveBalancesUnchanged) {
  Owned a("alice", 3000);
  auto id = a.device.se().device_id();
  EXPECT_EQ(code_of([&] { a.wallet.allocate_to_subwallet(id, 3001, a.device.se()); }),
            ErrorCode::Insufficient);
  EXPECT_EQ(code_of([&] { a.wallet.allocate_to_subwallet(id, 0, a.device.se()); }),
            ErrorCode::ValueInvalid);
  se::DeviceId stranger{};
  stranger[0] = 0xee;
  EXPECT_EQ(code_of([&] { a.wallet.allocate_to_subwallet(stranger, 10, a.device.se()); }),
            ErrorCode::UnknownDevice);
  EXPECT_EQ(a.wallet.online_balance(), 3000u);
  EXPECT_EQ(a.device.se().inspect().balance, 0u);
}

TEST(MainWallet, SeRefusalDoesNotDebit) {
  Owned a("alice", zkp::kAmountBound);
  auto id = a.device.se().device_id();
  EXPECT_EQ(code_of([&] { a.wallet.allocate_to_subwallet(id, zkp::kAmountBound, a.device.se()); }),
            ErrorCode::ExceedsDeviceLimit);
  EXPECT_EQ(a.wallet.online_balance(), zkp::kAmountBound);
}

TEST(MainWallet, AllocationRecordCannotBeReplayed) {
  Owned a("alice");
  auto rec = a.wallet.allocate_to_subwallet(a.device.se().device_id(), 1000, a.device.se());
  EXPECT_EQ(code_of([&] { a.device.se().load_value(rec); }), ErrorCode::AllocationInvalid);
  EXPECT_EQ(a.device.se().inspect().balance, 1000u);
  auto next = a.wallet.allocate_to_subwallet(a.device.se().device_id(), 1000, a.device.se());
  EXPECT_NE(next.nonce, rec.nonce);
}

TEST(MainWallet, ReclaimReturnsSpendableBalance) {
  Owned a("alice");
  auto id = a.device.se().device_id();
  EXPECT_EQ(a.wallet.reclaim_from_subwallet(id, a.device.se()), 0u);
  a.wallet.allocate_to_subwallet(id, 2500, a.device.se());
  EXPECT_EQ(a.wallet.reclaim_from_subwallet(id, a.device.se()), 2500u);
  EXPECT_EQ(a.wallet.online_balance(), 10000u);
  EXPECT_EQ(a.device.se().inspect().balance, 0u);
  EXPECT_EQ(a.wallet.reclaimed_from(id), 2500u);
}

TEST(SyncPayload, CollectIsDeterministicAndIgnoresForeignDevices) {
  Owned a("alice");
  Owned b("bob");
  a.wallet.allocate_to_subwallet(a.device.se().device_id(), 3000, a.device.se());
  pay(a.device, b.device, 700);

  std::vector<const protocol::Device*> devs{&b.device, &a.device};
  auto p1 = a.wallet.collect_sync_payload(devs);
  auto p2 = a.wallet.collect_sync_payload(devs);
  EXPECT_EQ(encode_to_bytes(p1), encode_to_bytes(p2));
  ASSERT_EQ(p1.segments.size(), 1u);
  const auto& seg = p1.segments[0];
  EXPECT_EQ(seg.device_id, a.device.se().device_id());
  EXPECT_EQ(seg.start_index, 0u);
  EXPECT_EQ(seg.entries.size(), 2u);  // load, payment
  EXPECT_EQ(seg.bundles.size(), 1u);
  EXPECT_EQ(seg.accepts.size(), 1u);
  EXPECT_EQ(decode_from_bytes<wallet::SyncPayload>(encode_to_bytes(p1)).entry_count(), 2u);

  auto pb = b.wallet.collect_sync_payload(devs);
  ASSERT_EQ(pb.segments.size(), 1u);
  EXPECT_EQ(pb.segments[0].receipts.size(), 1u);
}

TEST(SyncPayload, MarkSyncedAdvancesAndEmptyPayloadFollows) {
  Owned a("alice");
  Owned b("bob");
  a.wallet.allocate_to_subwallet(a.device.se().device_id(), 3000, a.device.se());
  pay(a.device, b.device, 100);
  std::vector<const protocol::Device*> devs{&a.device};
  auto p = a.wallet.collect_sync_payload(devs);
  a.wallet.mark_synced(p.segments.at(0));
  EXPECT_EQ(a.wallet.synced_index(a.device.se().device_id()), 2u);
  EXPECT_TRUE(a.wallet.collect_sync_payload(devs).empty());

  pay(a.device, b.device, 200);
  auto q = a.wallet.collect_sync_payload(devs);
  ASSERT_EQ(q.segments.size(), 1u);
  EXPECT_EQ(q.segments[0].start_index, 2u);
  EXPECT_EQ(q.segments[0].start_head, p.segments[0].end_head);
  EXPECT_EQ(q.segments[0].entries.size(), 1u);
}

TEST(SyncPayload, SegmentsAreOrderedByDeviceId) {
  SeFixture f1("one"), f2("two");
  wallet::MainWallet w(owner_id(9), f1.owner);
  f2.owner = f1.owner;
  f2.cert = zkp::sign_certificate(f2.fi.sk, f2.device.pk, f2.policy.limits, f2.policy.expiry_epoch);
  protocol::Device d1("one", f1.make(), f1.fi.pk);
  protocol::Device d2("two", f2.make(), f2.fi.pk);
  w.register_device(d1.se().device_id());
  w.register_device(d2.se().device_id());
  w.credit(100);
  w.allocate_to_subwallet(d1.se().device_id(), 50, d1.se());
  w.allocate_to_subwallet(d2.se().device_id(), 50, d2.se());
  auto p = w.collect_sync_payload(std::vector<const protocol::Device*>{&d2, &d1});
  ASSERT_EQ(p.segments.size(), 2u);
  EXPECT_LT(p.segments[0].device_id, p.segments[1].device_id);
}
