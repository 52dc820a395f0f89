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

#include <array>
#include <cstdint>

// Arithmetic in GF(2^255 - 19), radix 2^51. Not constant time.
namespace cbdc::crypto::detail {

struct Fe {
  std::uint64_t v[5];
};

Fe fe_zero();
Fe fe_one();
Fe fe_from_u64(std::uint64_t x);
Fe fe_from_bytes(const std::uint8_t in[32]);  // ignores bit 255
std::array<std::uint8_t, 32> fe_to_bytes(const Fe& a);  // canonical

Fe fe_neg(const Fe& a);
Fe fe_invert(const Fe& a);
Fe fe_pow22523(const Fe& a);

using u128 = unsigned __int128;
inline constexpr std::uint64_t kMask = (std::uint64_t{1} << 51) - 1;

inline void fe_carry(Fe& h) {
  std::uint64_t c;
  c = h.v[0] >> 51; h.v[0] &= kMask; h.v[1] += c;
  c = h.v[1] >> 51; h.v[1] &= kMask; h.v[2] += c;
  c = h.v[2] >> 51; h.v[2] &= kMask; h.v[3] += c;
  c = h.v[3] >> 51; h.v[3] &= kMask; h.v[4] += c;
  c = h.v[4] >> 51; h.v[4] &= kMask; h.v[0] += c * 19;
  c = h.v[0] >> 51; h.v[0] &= kMask; h.v[1] += c;
}

inline Fe fe_add(const Fe& a, const Fe& b) {
  Fe r;
  for (int i = 0; i < 5; ++i) r.v[i] = a.v[i] + b.v[i];
  fe_carry(r);
  return r;
}

inline Fe fe_sub(const Fe& a, const Fe& b) {
  // Adds 4p before subtracting; inputs are carried so limbs stay below 2^52.
  Fe r;
  r.v[0] = a.v[0] + 0x1fffffffffffb4ULL - b.v[0];
  r.v[1] = a.v[1] + 0x1ffffffffffffcULL - b.v[1];
  r.v[2] = a.v[2] + 0x1ffffffffffffcULL - b.v[2];
  r.v[3] = a.v[3] + 0x1ffffffffffffcULL - b.v[3];
  r.v[4] = a.v[4] + 0x1ffffffffffffcULL - b.v[4];
  fe_carry(r);
  return r;
}

inline Fe fe_mul(const Fe& a, const Fe& b) {
  const std::uint64_t a0 = a.v[0], a1 = a.v[1], a2 = a.v[2], a3 = a.v[3], a4 = a.v[4];
  const std::uint64_t b0 = b.v[0], b1 = b.v[1], b2 = b.v[2], b3 = b.v[3], b4 = b.v[4];
  const std::uint64_t b1_19 = b1 * 19, b2_19 = b2 * 19, b3_19 = b3 * 19, b4_19 = b4 * 19;

  u128 r0 = (u128)a0 * b0 + (u128)a1 * b4_19 + (u128)a2 * b3_19 + (u128)a3 * b2_19 + (u128)a4 * b1_19;
  u128 r1 = (u128)a0 * b1 + (u128)a1 * b0 + (u128)a2 * b4_19 + (u128)a3 * b3_19 + (u128)a4 * b2_19;
  u128 r2 = (u128)a0 * b2 + (u128)a1 * b1 + (u128)a2 * b0 + (u128)a3 * b4_19 + (u128)a4 * b3_19;
  u128 r3 = (u128)a0 * b3 + (u128)a1 * b2 + (u128)a2 * b1 + (u128)a3 * b0 + (u128)a4 * b4_19;
  u128 r4 = (u128)a0 * b4 + (u128)a1 * b3 + (u128)a2 * b2 + (u128)a3 * b1 + (u128)a4 * b0;

  Fe h;
  std::uint64_t c;
  c = static_cast<std::uint64_t>(r0 >> 51); h.v[0] = static_cast<std::uint64_t>(r0) & kMask; r1 += c;
  c = static_cast<std::uint64_t>(r1 >> 51); h.v[1] = static_cast<std::uint64_t>(r1) & kMask; r2 += c;
  c = static_cast<std::uint64_t>(r2 >> 51); h.v[2] = static_cast<std::uint64_t>(r2) & kMask; r3 += c;
  c = static_cast<std::uint64_t>(r3 >> 51); h.v[3] = static_cast<std::uint64_t>(r3) & kMask; r4 += c;
  c = static_cast<std::uint64_t>(r4 >> 51); h.v[4] = static_cast<std::uint64_t>(r4) & kMask;
  h.v[0] += c * 19;
  c = h.v[0] >> 51; h.v[0] &= kMask; h.v[1] += c;
  return h;
}

inline Fe fe_sq(const Fe& a) {
  const std::uint64_t a0 = a.v[0], a1 = a.v[1], a2 = a.v[2], a3 = a.v[3], a4 = a.v[4];
  const std::uint64_t d0 = a0 * 2, d1 = a1 * 2, d2 = a2 * 2 * 19, d4 = a4 * 19, d3 = a3 * 19;

  u128 r0 = (u128)a0 * a0 + (u128)d4 * a1 * 2 + (u128)d2 * a3;
  u128 r1 = (u128)d0 * a1 + (u128)d4 * a2 * 2 + (u128)a3 * d3;
  u128 r2 = (u128)d0 * a2 + (u128)a1 * a1 + (u128)d4 * a3 * 2;
  u128 r3 = (u128)d0 * a3 + (u128)d1 * a2 + (u128)a4 * d4;
  u128 r4 = (u128)d0 * a4 + (u128)d1 * a3 + (u128)a2 * a2;

  Fe h;
  std::uint64_t c;
  c = static_cast<std::uint64_t>(r0 >> 51); h.v[0] = static_cast<std::uint64_t>(r0) & kMask; r1 += c;
  c = static_cast<std::uint64_t>(r1 >> 51); h.v[1] = static_cast<std::uint64_t>(r1) & kMask; r2 += c;
  c = static_cast<std::uint64_t>(r2 >> 51); h.v[2] = static_cast<std::uint64_t>(r2) & kMask; r3 += c;
  c = static_cast<std::uint64_t>(r3 >> 51); h.v[3] = static_cast<std::uint64_t>(r3) & kMask; r4 += c;
  c = static_cast<std::uint64_t>(r4 >> 51); h.v[4] = static_cast<std::uint64_t>(r4) & kMask;
  h.v[0] += c * 19;
  c = h.v[0] >> 51; h.v[0] &= kMask; h.v[1] += c;
  return h;
}

bool fe_is_zero(const Fe& a);
bool fe_is_negative(const Fe& a);
bool fe_equal(const Fe& a, const Fe& b);
Fe fe_abs(const Fe& a);

struct SqrtRatio {
  bool was_square;
  Fe root;
};

// ristretto255 SQRT_RATIO_M1(u, v).
SqrtRatio fe_sqrt_ratio_m1(const Fe& u, const Fe& v);

// Curve and ristretto constants.
const Fe& fe_d();
const Fe& fe_d2();
const Fe& fe_sqrt_m1();
const Fe& fe_sqrt_ad_minus_one();
const Fe& fe_invsqrt_a_minus_d();
const Fe& fe_one_minus_d_sq();
const Fe& fe_d_minus_one_sq();

}  // namespace cbdc::crypto::detail
