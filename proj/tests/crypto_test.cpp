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
#include <sodium.h>

#include <cstring>
#include <functional>
#include <random>

#include "cbdc/common/error.hpp"
#include "cbdc/crypto/group.hpp"
#include "cbdc/crypto/hash.hpp"
#include "cbdc/crypto/pedersen.hpp"
#include "cbdc/crypto/schnorr.hpp"
#include "cbdc/crypto/transcript.hpp"

using namespace cbdc;
using namespace cbdc::crypto;

namespace {

std::mt19937_64& rng() {
  static std::mt19937_64 r(0xC0FFEE);
  return r;
}

Bytes random_bytes(std::size_t n) {
  Bytes b(n);
  for (auto& x : b) x = static_cast<std::uint8_t>(rng()());
  return b;
}

Scalar random_scalar() { return Scalar::from_wide_be(random_bytes(64)); }

// libsodium works on little-endian scalars.
std::array<std::uint8_t, 32> sodium_scalar(const Scalar& s) { return s.le_bytes(); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::ScenarioInvalid;
}

}  // namespace

// ---------------------------------------------------------------------------
// Group arithmetic checked against libsodium's ristretto255.

TEST(GroupOracle, BasePointMatchesSodium) {
  ensure_sodium();
  std::array<std::uint8_t, 32> one{};
  one[0] = 1;
  std::array<std::uint8_t, 32> expected{};
  ASSERT_EQ(crypto_scalarmult_ristretto255_base(expected.data(), one.data()), 0);
  EXPECT_EQ(GroupElement::base().to_bytes(), expected);
}

TEST(GroupOracle, ScalarMultiplicationMatchesSodium) {
  ensure_sodium();
  for (int i = 0; i < 40; ++i) {
    Scalar k = random_scalar();
    auto le = sodium_scalar(k);
    std::array<std::uint8_t, 32> expected{};
    ASSERT_EQ(crypto_scalarmult_ristretto255_base(expected.data(), le.data()), 0);
    EXPECT_EQ(base_table().mul(k).to_bytes(), expected);
    EXPECT_EQ((k * GroupElement::base()).to_bytes(), expected);

    GroupElement p = GroupElement::from_uniform_bytes(random_bytes(64));
    auto p_enc = p.to_bytes();
    std::array<std::uint8_t, 32> var_expected{};
    ASSERT_EQ(crypto_scalarmult_ristretto255(var_expected.data(), le.data(), p_enc.data()), 0);
    EXPECT_EQ((k * p).to_bytes(), var_expected);
    EXPECT_EQ(FixedBaseTable(p).mul(k).to_bytes(), var_expected);
  }
}

TEST(GroupOracle, HashToGroupMatchesSodium) {
  ensure_sodium();
  for (int i = 0; i < 50; ++i) {
    Bytes h = random_bytes(64);
    std::array<std::uint8_t, 32> expected{};
    crypto_core_ristretto255_from_hash(expected.data(), h.data());
    EXPECT_EQ(GroupElement::from_uniform_bytes(h).to_bytes(), expected);
  }
}

TEST(GroupOracle, AdditionAndSubtractionMatchSodium) {
  ensure_sodium();
  for (int i = 0; i < 50; ++i) {
    GroupElement a = GroupElement::from_uniform_bytes(random_bytes(64));
    GroupElement b = GroupElement::from_uniform_bytes(random_bytes(64));
    auto ae = a.to_bytes();
    auto be = b.to_bytes();
    std::array<std::uint8_t, 32> sum{}, diff{};
    crypto_core_ristretto255_add(sum.data(), ae.data(), be.data());
    crypto_core_ristretto255_sub(diff.data(), ae.data(), be.data());
    EXPECT_EQ((a + b).to_bytes(), sum);
    EXPECT_EQ((a - b).to_bytes(), diff);
    EXPECT_EQ((a.dbl()).to_bytes(), (a + a).to_bytes());
  }
}

TEST(GroupOracle, DecodeValidityAgreesWithSodium) {
  ensure_sodium();
  int valid = 0;
  for (int i = 0; i < 2000; ++i) {
    Bytes b = random_bytes(32);
    if (i % 2 == 0) b[31] &= 0x7f;
    b[0] &= 0xfe;  // half of random inputs are then plausible
    bool sodium_ok = crypto_core_ristretto255_is_valid_point(b.data()) == 1;
    bool ours_ok = true;
    try {
      auto p = GroupElement::from_bytes(b);
      EXPECT_TRUE(std::equal(b.begin(), b.end(), p.to_bytes().begin()));
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::DecodeError);
      ours_ok = false;
    }
    // libsodium ignores the top bit of the last byte; canonical ristretto
    // encodings must have it clear.
    if (b[31] & 0x80) {
      EXPECT_FALSE(ours_ok) << to_hex(b);
    } else {
      EXPECT_EQ(ours_ok, sodium_ok) << to_hex(b);
    }
    valid += ours_ok;
  }
  EXPECT_GT(valid, 100);
}

TEST(Group, IdentityEncodesAsZeroesAndRoundTrips) {
  GroupElement id;
  auto enc = id.to_bytes();
  EXPECT_TRUE(std::all_of(enc.begin(), enc.end(), [](auto b) { return b == 0; }));
  EXPECT_TRUE(GroupElement::from_bytes(enc).is_identity());
  EXPECT_TRUE((Scalar::zero() * GroupElement::base()).is_identity());
  EXPECT_TRUE((GroupElement::base() - GroupElement::base()).is_identity());
}

TEST(Group, TruncatedEncodingIsDecodeError) {
  auto enc = GroupElement::base().to_bytes();
  EXPECT_EQ(code_of([&] { GroupElement::from_bytes(ByteView(enc).first(31)); }),
            ErrorCode::DecodeError);
}

TEST(Group, EncodingRoundTripProperty) {
  for (int i = 0; i < 200; ++i) {
    GroupElement p = random_scalar() * GroupElement::base();
    EXPECT_EQ(GroupElement::from_bytes(p.to_bytes()), p);
  }
}

// ---------------------------------------------------------------------------
// Scalars

TEST(Scalar, EncodingIsBigEndianAndRoundTrips) {
  auto enc = Scalar::from_u64(0x0102).to_bytes();
  EXPECT_EQ(enc[31], 0x02);
  EXPECT_EQ(enc[30], 0x01);
  for (int i = 0; i < 200; ++i) {
    Scalar s = random_scalar();
    EXPECT_EQ(Scalar::from_bytes(s.to_bytes()), s);
  }
}

TEST(Scalar, RejectsValuesAtOrAboveOrder) {
  auto q = from_hex("1000000000000000000000000000000014def9dea2f79cd65812631a5cf5d3ed");
  EXPECT_EQ(code_of([&] { Scalar::from_bytes(q); }), ErrorCode::DecodeError);
  q[31] -= 1;  // q - 1 is fine
  EXPECT_EQ(Scalar::from_bytes(q) + Scalar::one(), Scalar::zero());
}

TEST(Scalar, WideReductionIsBigEndian) {
  Bytes wide(64, 0);
  wide[63] = 7;
  EXPECT_EQ(Scalar::from_wide_be(wide), Scalar::from_u64(7));
}

// ---------------------------------------------------------------------------
// Pedersen

TEST(Pedersen, GeneratorsAreDeterministicAndDistinct) {
  PedersenParams a = derive_generators("cbdc/v1");
  PedersenParams b = derive_generators("cbdc/v1");
  PedersenParams c = derive_generators("cbdc/v2");
  EXPECT_EQ(a.g_val(), b.g_val());
  EXPECT_EQ(a.g_blind(), b.g_blind());
  EXPECT_NE(a.g_val().to_bytes(), c.g_val().to_bytes());
  EXPECT_FALSE(a.g_val().is_identity());
  EXPECT_FALSE(a.g_blind().is_identity());
  EXPECT_FALSE(a.g_val() == a.g_blind());
  EXPECT_FALSE(a.g_val() == GroupElement::base());
}

TEST(Pedersen, EmptyTagIsRefused) {
  EXPECT_EQ(code_of([] { derive_generators(""); }), ErrorCode::ValueInvalid);
}

TEST(Pedersen, SpotValues) {
  const auto& p = default_params();
  EXPECT_TRUE(p.commit(Scalar::zero(), Scalar::zero()).is_identity());
  EXPECT_EQ(p.commit(Scalar::one(), Scalar::zero()), p.g_val());
  EXPECT_EQ(p.commit(2, Scalar::from_u64(3)) + p.commit(5, Scalar::from_u64(7)),
            p.commit(7, Scalar::from_u64(10)));
}

TEST(Pedersen, HomomorphismProperty) {
  const auto& p = default_params();
  for (int i = 0; i < 100; ++i) {
    Scalar a = random_scalar(), b = random_scalar(), r = random_scalar(), s = random_scalar();
    EXPECT_EQ(pedersen_commit(a, r, p) + pedersen_commit(b, s, p), pedersen_commit(a + b, r + s, p));
  }
}

// ---------------------------------------------------------------------------
// Schnorr

TEST(Schnorr, SignVerifyAndDeterminism) {
  KeyPair kp = KeyPair::derive(as_bytes("alice"));
  Bytes m = {1, 2, 3};
  Signature s1 = schnorr_sign(kp.sk, m);
  Signature s2 = schnorr_sign(kp.sk, m);
  EXPECT_TRUE(schnorr_verify(kp.pk, m, s1));
  EXPECT_EQ(s1.to_bytes(), s2.to_bytes());
  Bytes other = {1, 2, 4};
  EXPECT_FALSE(schnorr_verify(kp.pk, other, s1));
  EXPECT_FALSE(schnorr_verify(KeyPair::derive(as_bytes("bob")).pk, m, s1));
}

TEST(Schnorr, ResponsePlusOneFails) {
  KeyPair kp = KeyPair::derive(as_bytes("carol"));
  Bytes m = {9};
  Signature s = schnorr_sign(kp.sk, m);
  s.response += Scalar::one();
  EXPECT_FALSE(schnorr_verify(kp.pk, m, s));
}

TEST(Schnorr, TruncatedPublicKeyIsDecodeError) {
  KeyPair kp = KeyPair::derive(as_bytes("dave"));
  Bytes m = {1};
  auto sig = schnorr_sign(kp.sk, m).to_bytes();
  auto pk = kp.pk.to_bytes();
  EXPECT_TRUE(schnorr_verify_encoded(pk, m, sig));
  EXPECT_EQ(code_of([&] { schnorr_verify_encoded(ByteView(pk).first(20), m, sig); }),
            ErrorCode::DecodeError);
}

TEST(Schnorr, CorrectnessProperty) {
  for (int i = 0; i < 50; ++i) {
    KeyPair kp = KeyPair::from_secret(random_scalar());
    Bytes m = random_bytes(rng()() % 100);
    EXPECT_TRUE(schnorr_verify(kp.pk, m, schnorr_sign(kp.sk, m)));
  }
}

TEST(Schnorr, EverySingleBitMutationFails) {
  KeyPair kp = KeyPair::derive(as_bytes("erin"));
  ByteView pv = as_bytes("payload");
  Bytes m(pv.begin(), pv.end());
  auto enc = schnorr_sign(kp.sk, m).to_bytes();
  for (std::size_t byte = 0; byte < enc.size(); ++byte) {
    for (int bit = 0; bit < 8; ++bit) {
      auto mutated = enc;
      mutated[byte] ^= static_cast<std::uint8_t>(1u << bit);
      bool verified = false;
      try {
        verified = schnorr_verify_encoded(kp.pk.to_bytes(), m, mutated);
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DecodeError);
      }
      EXPECT_FALSE(verified) << "byte " << byte << " bit " << bit;
    }
  }
}

// ---------------------------------------------------------------------------
// Transcript

TEST(Transcript, OrderSensitive) {
  Transcript ab("t"), ba("t");
  ab.absorb("a", "1").absorb("b", "2");
  ba.absorb("b", "2").absorb("a", "1");
  EXPECT_NE(ab.challenge("c"), ba.challenge("c"));
}

TEST(Transcript, SameHistorySameChallenge) {
  Transcript t1("t"), t2("t");
  t1.absorb("a", "1");
  t2.absorb("a", "1");
  EXPECT_EQ(t1.challenge("c"), t2.challenge("c"));
}

TEST(Transcript, LabelDataBoundaryIsFramed) {
  Transcript t1("t"), t2("t");
  t1.absorb("x", "");
  t2.absorb("", "x");
  EXPECT_NE(t1.challenge("c"), t2.challenge("c"));
}

TEST(Transcript, ConsecutiveChallengesDiffer) {
  Transcript t("t");
  Scalar a = t.challenge("c");
  Scalar b = t.challenge("c");
  EXPECT_NE(a, b);
}

// Values from tests/oracles/reference_vectors.py (hashlib, independent of
// this code base).
TEST(Transcript, PinnedVectors) {
  Transcript fresh("cbdc/vectors");
  EXPECT_EQ(to_hex(fresh.challenge("challenge").to_bytes()),
            "0c17912d44e2d7bec2f129fc1282b3a8595c163b766a674471f0d75fceec1102");

  Transcript t("cbdc/test");
  Bytes one = {1};
  t.absorb("a", one);
  EXPECT_EQ(to_hex(t.challenge("c").to_bytes()),
            "01ac172b4ae0f026a28fc5fedcd5120f913fd741a6d68a580fb7ede9118479fc");
}

TEST(Transcript, WitnessScalarDoesNotAdvanceState) {
  Transcript t1("t"), t2("t");
  Bytes secret = {4, 2};
  (void)t1.witness_scalar("n", secret, 0);
  EXPECT_EQ(t1.challenge("c"), t2.challenge("c"));
  EXPECT_NE(t1.witness_scalar("n", secret, 0), t1.witness_scalar("n", secret, 1));
}
