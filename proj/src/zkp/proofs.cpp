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

#include "cbdc/zkp/proofs.hpp"

#include "cbdc/common/error.hpp"
#include "cbdc/crypto/codec.hpp"

namespace cbdc::zkp {

using namespace crypto;

namespace {

Scalar power_of_two(unsigned j) {
  Scalar s = Scalar::one();
  for (unsigned i = 0; i < j; ++i) s += s;
  return s;
}

// Random 128-bit weight for batching the range-proof equations.
Scalar batch_weight(const Transcript& t, std::uint32_t index) {
  auto bytes = t.witness_scalar("range/weight", {}, index).to_bytes();
  std::fill(bytes.begin(), bytes.begin() + 16, 0);
  return Scalar::from_bytes(bytes);
}

void absorb_bit_commitments(Transcript& t, const GroupElement& c, const BitProof& p) {
  t.absorb_point("bit/C", c).absorb_point("bit/A0", p.a0).absorb_point("bit/A1", p.a1);
}

void check_width(unsigned n) {
  if (n == 0 || n > kMaxRangeBits) fail(ErrorCode::ValueInvalid, "range width must be 1..64");
}

}  // namespace

void BitProof::encode(ByteWriter& w) const {
  write_point(w, a0);
  write_point(w, a1);
  write_scalar(w, c0);
  write_scalar(w, c1);
  write_scalar(w, z0);
  write_scalar(w, z1);
}

BitProof BitProof::decode(ByteReader& r) {
  BitProof p;
  p.a0 = read_point(r);
  p.a1 = read_point(r);
  p.c0 = read_scalar(r);
  p.c1 = read_scalar(r);
  p.z0 = read_scalar(r);
  p.z1 = read_scalar(r);
  return p;
}

BitProof prove_bit(unsigned bit, const Scalar& blinding, const GroupElement& commitment,
                   Transcript& transcript, const PedersenParams& params) {
  if (bit > 1) fail(ErrorCode::InvalidWitness, "bit must be 0 or 1");
  if (params.commit(bit, blinding) != commitment) {
    fail(ErrorCode::InvalidWitness, "commitment does not open to the bit");
  }
  transcript.absorb_point("bit/C", commitment);

  ByteWriter secret;
  secret.raw(blinding.to_bytes()).u8(static_cast<std::uint8_t>(bit));
  Scalar k = transcript.witness_scalar("bit/k", secret.bytes(), 0);
  Scalar c_fake = transcript.witness_scalar("bit/k", secret.bytes(), 1);
  Scalar z_fake = transcript.witness_scalar("bit/k", secret.bytes(), 2);

  // Simulated branch f = 1 - bit. With C - f*G = (bit - f)*G + r*H:
  //   A_f = z_f*H - c_f*(C - f*G) = (z_f - c_f*r)*H - c_f*(bit - f)*G
  GroupElement a_real = params.blind_term(k);
  GroupElement a_fake = params.blind_term(z_fake - c_fake * blinding);
  if (bit == 1) {
    a_fake -= params.value_term(c_fake);
  } else {
    a_fake += params.value_term(c_fake);
  }

  BitProof p;
  p.a0 = bit == 0 ? a_real : a_fake;
  p.a1 = bit == 0 ? a_fake : a_real;
  transcript.absorb_point("bit/A0", p.a0).absorb_point("bit/A1", p.a1);
  Scalar c = transcript.challenge("bit/c");
  Scalar c_real = c - c_fake;
  Scalar z_real = k + c_real * blinding;
  if (bit == 0) {
    p.c0 = c_real, p.z0 = z_real, p.c1 = c_fake, p.z1 = z_fake;
  } else {
    p.c1 = c_real, p.z1 = z_real, p.c0 = c_fake, p.z0 = z_fake;
  }
  return p;
}

bool verify_bit(const GroupElement& commitment, const BitProof& proof, Transcript& transcript,
                const PedersenParams& params) {
  absorb_bit_commitments(transcript, commitment, proof);
  Scalar c = transcript.challenge("bit/c");
  if (proof.c0 + proof.c1 != c) return false;
  bool zero_branch = params.blind_term(proof.z0) == proof.a0 + proof.c0 * commitment;
  bool one_branch =
      params.blind_term(proof.z1) == proof.a1 + proof.c1 * (commitment - params.g_val());
  return zero_branch && one_branch;
}

std::size_t RangeProof::size_bytes() const {
  return bit_commitments.size() * GroupElement::kEncodedSize +
         bit_proofs.size() * BitProof::kEncodedSize + Scalar::kEncodedSize;
}

void RangeProof::encode(ByteWriter& w) const {
  w.count(bit_commitments.size());
  for (const auto& c : bit_commitments) write_point(w, c);
  w.count(bit_proofs.size());
  for (const auto& p : bit_proofs) p.encode(w);
  write_scalar(w, consistency_response);
}

RangeProof RangeProof::decode(ByteReader& r) {
  RangeProof p;
  std::size_t n = r.count(GroupElement::kEncodedSize);
  if (n > kMaxRangeBits) fail(ErrorCode::DecodeError, "range proof too wide");
  p.bit_commitments.reserve(n);
  for (std::size_t i = 0; i < n; ++i) p.bit_commitments.push_back(read_point(r));
  std::size_t m = r.count(BitProof::kEncodedSize);
  if (m > kMaxRangeBits) fail(ErrorCode::DecodeError, "range proof too wide");
  p.bit_proofs.reserve(m);
  for (std::size_t i = 0; i < m; ++i) p.bit_proofs.push_back(BitProof::decode(r));
  p.consistency_response = read_scalar(r);
  return p;
}

RangeProof prove_range(std::uint64_t value, const Scalar& blinding, unsigned n,
                       Transcript& transcript, const PedersenParams& params) {
  check_width(n);
  if (n < 64 && value >> n != 0) {
    fail(ErrorCode::OutOfRange, std::to_string(value) + " does not fit in " + std::to_string(n) +
                                    " bits");
  }
  GroupElement c_target = params.commit(value, blinding);
  transcript.absorb_u64("range/n", n).absorb_point("range/C", c_target);

  ByteWriter secret;
  secret.raw(blinding.to_bytes()).u64(value);

  RangeProof proof;
  Scalar weighted_blinding;
  for (unsigned j = 0; j < n; ++j) {
    unsigned bit = static_cast<unsigned>((value >> j) & 1);
    Scalar r_j = transcript.witness_scalar("range/r", secret.bytes(), j);
    GroupElement c_j = params.commit(bit, r_j);
    proof.bit_commitments.push_back(c_j);
    proof.bit_proofs.push_back(prove_bit(bit, r_j, c_j, transcript, params));
    weighted_blinding += power_of_two(j) * r_j;
  }
  proof.consistency_response = weighted_blinding - blinding;
  transcript.absorb_scalar("range/d", proof.consistency_response);
  return proof;
}

bool verify_range(const GroupElement& c_target, const RangeProof& proof, unsigned n,
                  Transcript& transcript, const PedersenParams& params) {
  check_width(n);
  if (proof.bit_commitments.size() != n || proof.bit_proofs.size() != n) {
    fail(ErrorCode::LengthMismatch, "range proof carries " +
                                        std::to_string(proof.bit_commitments.size()) +
                                        " bits, expected " + std::to_string(n));
  }
  transcript.absorb_u64("range/n", n).absorb_point("range/C", c_target);
  bool challenges_ok = true;
  for (unsigned j = 0; j < n; ++j) {
    const BitProof& p = proof.bit_proofs[j];
    absorb_bit_commitments(transcript, proof.bit_commitments[j], p);
    if (p.c0 + p.c1 != transcript.challenge("bit/c")) challenges_ok = false;
  }
  transcript.absorb_scalar("range/d", proof.consistency_response);
  if (!challenges_ok) return false;

  // All 2n branch equations and the consistency equation, combined with
  // random weights rho_j, sigma_j into one multi-scalar check:
  //   sum_j rho_j (z0 H - c0 C_j - A0_j) + sigma_j (z1 H - c1 (C_j - G) - A1_j)
  //   + (sum_j 2^j C_j - C_target - d H) == 0
  const Transcript fork = transcript;
  Scalar h_coeff = -proof.consistency_response;
  Scalar g_coeff;
  std::vector<Scalar> scalars;
  std::vector<GroupElement> points;
  scalars.reserve(3 * n + 1);
  points.reserve(3 * n + 1);
  Scalar two_j = Scalar::one();
  for (unsigned j = 0; j < n; ++j) {
    const BitProof& p = proof.bit_proofs[j];
    Scalar rho = batch_weight(fork, 2 * j);
    Scalar sigma = batch_weight(fork, 2 * j + 1);
    h_coeff += rho * p.z0 + sigma * p.z1;
    g_coeff += sigma * p.c1;
    scalars.push_back(two_j - rho * p.c0 - sigma * p.c1);
    points.push_back(proof.bit_commitments[j]);
    scalars.push_back(rho);
    points.push_back(-p.a0);
    scalars.push_back(sigma);
    points.push_back(-p.a1);
    two_j += two_j;
  }
  scalars.push_back(Scalar::one());
  points.push_back(-c_target);

  GroupElement sum = params.blind_term(h_coeff) + params.value_term(g_coeff) +
                     multi_scalar_mul(scalars, points);
  return sum.is_identity();
}

void OwnershipProof::encode(ByteWriter& w) const {
  write_point(w, commit_point);
  write_scalar(w, response);
}

OwnershipProof OwnershipProof::decode(ByteReader& r) {
  OwnershipProof p;
  p.commit_point = read_point(r);
  p.response = read_scalar(r);
  return p;
}

OwnershipProof prove_ownership(const KeyPair& keys, Transcript& transcript) {
  Scalar k = transcript.witness_scalar("own/k", keys.sk.to_bytes(), 0);
  OwnershipProof p;
  p.commit_point = base_table().mul(k);
  transcript.absorb_point("own/pk", keys.pk).absorb_point("own/R", p.commit_point);
  Scalar c = transcript.challenge("own/c");
  p.response = k + c * keys.sk;
  return p;
}

bool verify_ownership(const GroupElement& pk, const OwnershipProof& proof,
                      Transcript& transcript) {
  transcript.absorb_point("own/pk", pk).absorb_point("own/R", proof.commit_point);
  Scalar c = transcript.challenge("own/c");
  return base_table().mul(proof.response) - c * pk == proof.commit_point;
}

}  // namespace cbdc::zkp
