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
#include <vector>

#include "cbdc/common/bytes.hpp"
#include "cbdc/crypto/pedersen.hpp"
#include "cbdc/crypto/schnorr.hpp"
#include "cbdc/crypto/transcript.hpp"

namespace cbdc::zkp {

using crypto::GroupElement;
using crypto::PedersenParams;
using crypto::Scalar;
using crypto::Transcript;

// Two-branch OR proof that C opens to 0 or 1 on g_val:
//   branch i: a_i + c_i * (C - i*g_val) == z_i * g_blind,  c_0 + c_1 == c
struct BitProof {
  static constexpr std::size_t kEncodedSize = 2 * 32 + 4 * 32;

  GroupElement a0, a1;
  Scalar c0, c1;
  Scalar z0, z1;

  void encode(ByteWriter& w) const;
  static BitProof decode(ByteReader& r);
  bool operator==(const BitProof&) const = default;
};

BitProof prove_bit(unsigned bit, const Scalar& blinding, const GroupElement& commitment,
                   Transcript& transcript, const PedersenParams& params = crypto::default_params());

bool verify_bit(const GroupElement& commitment, const BitProof& proof, Transcript& transcript,
                const PedersenParams& params = crypto::default_params());

// Bit-decomposition range proof. consistency_response is the blinding
// difference d with sum_j 2^j C_j - C_target == d * g_blind.
struct RangeProof {
  std::vector<GroupElement> bit_commitments;
  std::vector<BitProof> bit_proofs;
  Scalar consistency_response;

  std::size_t bit_width() const { return bit_commitments.size(); }
  // n * E_len + n * |BitProof| + |Scalar|; excludes the list count prefixes
  // of the wire encoding.
  std::size_t size_bytes() const;

  void encode(ByteWriter& w) const;
  static RangeProof decode(ByteReader& r);
  bool operator==(const RangeProof&) const = default;
};

constexpr std::size_t range_proof_analytic_size(std::size_t n) {
  return n * GroupElement::kEncodedSize + n * BitProof::kEncodedSize + Scalar::kEncodedSize;
}

constexpr unsigned kMaxRangeBits = 64;

// OutOfRange if value >= 2^n; ValueInvalid if n is 0 or above kMaxRangeBits.
RangeProof prove_range(std::uint64_t value, const Scalar& blinding, unsigned n,
                       Transcript& transcript,
                       const PedersenParams& params = crypto::default_params());

// LengthMismatch if the proof does not carry n bits.
bool verify_range(const GroupElement& c_target, const RangeProof& proof, unsigned n,
                  Transcript& transcript, const PedersenParams& params = crypto::default_params());

// Schnorr proof of knowledge of sk for pk, challenge drawn from the caller's
// transcript.
struct OwnershipProof {
  static constexpr std::size_t kEncodedSize = 64;

  GroupElement commit_point;
  Scalar response;

  void encode(ByteWriter& w) const;
  static OwnershipProof decode(ByteReader& r);
  bool operator==(const OwnershipProof&) const = default;
};

OwnershipProof prove_ownership(const crypto::KeyPair& keys, Transcript& transcript);
bool verify_ownership(const GroupElement& pk, const OwnershipProof& proof, Transcript& transcript);

}  // namespace cbdc::zkp
