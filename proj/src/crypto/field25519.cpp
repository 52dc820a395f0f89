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

#include "cbdc/crypto/detail/field25519.hpp"

#include <cstring>

namespace cbdc::crypto::detail {

namespace {

std::uint64_t load64(const std::uint8_t* p) {
  std::uint64_t r = 0;
  for (int i = 7; i >= 0; --i) r = (r << 8) | p[i];
  return r;
}

Fe sq_times(Fe a, int n) {
  for (int i = 0; i < n; ++i) a = fe_sq(a);
  return a;
}

Fe from_le_hex(const char* hex) {
  std::uint8_t b[32];
  for (int i = 0; i < 32; ++i) {
    auto nib = [](char c) { return c <= '9' ? c - '0' : c - 'a' + 10; };
    b[i] = static_cast<std::uint8_t>((nib(hex[2 * i]) << 4) | nib(hex[2 * i + 1]));
  }
  return fe_from_bytes(b);
}

}  // namespace

Fe fe_zero() { return Fe{{0, 0, 0, 0, 0}}; }
Fe fe_one() { return Fe{{1, 0, 0, 0, 0}}; }

Fe fe_from_u64(std::uint64_t x) {
  Fe r{{x & kMask, x >> 51, 0, 0, 0}};
  return r;
}

Fe fe_from_bytes(const std::uint8_t in[32]) {
  Fe h;
  h.v[0] = load64(in) & kMask;
  h.v[1] = (load64(in + 6) >> 3) & kMask;
  h.v[2] = (load64(in + 12) >> 6) & kMask;
  h.v[3] = (load64(in + 19) >> 1) & kMask;
  h.v[4] = (load64(in + 24) >> 12) & kMask;
  return h;
}

std::array<std::uint8_t, 32> fe_to_bytes(const Fe& a) {
  Fe h = a;
  fe_carry(h);
  fe_carry(h);
  // q = 1 iff h >= p.
  std::uint64_t q = (h.v[0] + 19) >> 51;
  q = (h.v[1] + q) >> 51;
  q = (h.v[2] + q) >> 51;
  q = (h.v[3] + q) >> 51;
  q = (h.v[4] + q) >> 51;
  h.v[0] += 19 * q;
  std::uint64_t c;
  c = h.v[0] >> 51; h.v[0] &= kMask; h.v[1] += c;
  c = h.v[1] >> 51; h.v[1] &= kMask; h.v[2] += c;
  c = h.v[2] >> 51; h.v[2] &= kMask; h.v[3] += c;
  c = h.v[3] >> 51; h.v[3] &= kMask; h.v[4] += c;
  h.v[4] &= kMask;

  std::array<std::uint8_t, 32> out{};
  std::uint64_t w[4];
  w[0] = h.v[0] | (h.v[1] << 51);
  w[1] = (h.v[1] >> 13) | (h.v[2] << 38);
  w[2] = (h.v[2] >> 26) | (h.v[3] << 25);
  w[3] = (h.v[3] >> 39) | (h.v[4] << 12);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 8; ++j) out[8 * i + j] = static_cast<std::uint8_t>(w[i] >> (8 * j));
  }
  return out;
}

Fe fe_neg(const Fe& a) { return fe_sub(fe_zero(), a); }

Fe fe_invert(const Fe& z) {
  Fe t0 = fe_sq(z);                       // 2
  Fe t1 = sq_times(t0, 2);                // 8
  t1 = fe_mul(z, t1);                     // 9
  t0 = fe_mul(t0, t1);                    // 11
  Fe t2 = fe_sq(t0);                      // 22
  t1 = fe_mul(t1, t2);                    // 2^5 - 1
  t2 = sq_times(t1, 5);
  t1 = fe_mul(t2, t1);                    // 2^10 - 1
  t2 = sq_times(t1, 10);
  t2 = fe_mul(t2, t1);                    // 2^20 - 1
  Fe t3 = sq_times(t2, 20);
  t2 = fe_mul(t3, t2);                    // 2^40 - 1
  t2 = sq_times(t2, 10);
  t1 = fe_mul(t2, t1);                    // 2^50 - 1
  t2 = sq_times(t1, 50);
  t2 = fe_mul(t2, t1);                    // 2^100 - 1
  t3 = sq_times(t2, 100);
  t2 = fe_mul(t3, t2);                    // 2^200 - 1
  t2 = sq_times(t2, 50);
  t1 = fe_mul(t2, t1);                    // 2^250 - 1
  t1 = sq_times(t1, 5);
  return fe_mul(t1, t0);                  // 2^255 - 21
}

Fe fe_pow22523(const Fe& z) {
  Fe t0 = fe_sq(z);
  Fe t1 = sq_times(t0, 2);
  t1 = fe_mul(z, t1);                     // 9
  t0 = fe_mul(t0, t1);                    // 11
  t0 = fe_sq(t0);                         // 22
  t0 = fe_mul(t1, t0);                    // 2^5 - 1
  t1 = sq_times(t0, 5);
  t0 = fe_mul(t1, t0);                    // 2^10 - 1
  t1 = sq_times(t0, 10);
  t1 = fe_mul(t1, t0);                    // 2^20 - 1
  Fe t2 = sq_times(t1, 20);
  t1 = fe_mul(t2, t1);                    // 2^40 - 1
  t1 = sq_times(t1, 10);
  t0 = fe_mul(t1, t0);                    // 2^50 - 1
  t1 = sq_times(t0, 50);
  t1 = fe_mul(t1, t0);                    // 2^100 - 1
  t2 = sq_times(t1, 100);
  t1 = fe_mul(t2, t1);                    // 2^200 - 1
  t1 = sq_times(t1, 50);
  t0 = fe_mul(t1, t0);                    // 2^250 - 1
  t0 = sq_times(t0, 2);
  return fe_mul(t0, z);                   // 2^252 - 3
}

bool fe_is_zero(const Fe& a) {
  auto b = fe_to_bytes(a);
  std::uint8_t acc = 0;
  for (auto x : b) acc |= x;
  return acc == 0;
}

bool fe_is_negative(const Fe& a) { return (fe_to_bytes(a)[0] & 1) != 0; }

bool fe_equal(const Fe& a, const Fe& b) { return fe_to_bytes(a) == fe_to_bytes(b); }

Fe fe_abs(const Fe& a) { return fe_is_negative(a) ? fe_neg(a) : a; }

SqrtRatio fe_sqrt_ratio_m1(const Fe& u, const Fe& v) {
  Fe v3 = fe_mul(fe_sq(v), v);
  Fe v7 = fe_mul(fe_sq(v3), v);
  Fe r = fe_mul(fe_mul(u, v3), fe_pow22523(fe_mul(u, v7)));
  Fe check = fe_mul(v, fe_sq(r));

  Fe neg_u = fe_neg(u);
  bool correct_sign = fe_equal(check, u);
  bool flipped_sign = fe_equal(check, neg_u);
  bool flipped_sign_i = fe_equal(check, fe_mul(neg_u, fe_sqrt_m1()));

  if (flipped_sign || flipped_sign_i) r = fe_mul(r, fe_sqrt_m1());
  return {correct_sign || flipped_sign, fe_abs(r)};
}

const Fe& fe_d() {
  static const Fe c = from_le_hex("a3785913ca4deb75abd841414d0a700098e879777940c78c73fe6f2bee6c0352");
  return c;
}

const Fe& fe_d2() {
  static const Fe c = fe_add(fe_d(), fe_d());
  return c;
}

const Fe& fe_sqrt_m1() {
  static const Fe c = from_le_hex("b0a00e4a271beec478e42fad0618432fa7d7fb3d99004d2b0bdfc14f8024832b");
  return c;
}

const Fe& fe_sqrt_ad_minus_one() {
  static const Fe c = from_le_hex("1b2e7b49a0f6977ebd54781b0c8e9daffdd1f531c9fc3c0fac48832bbf316937");
  return c;
}

const Fe& fe_invsqrt_a_minus_d() {
  static const Fe c = from_le_hex("ea405d80aafdc899be72415a17162f9d40d801fe917bc216a2fcafcf05896c78");
  return c;
}

const Fe& fe_one_minus_d_sq() {
  static const Fe c = from_le_hex("76c15f94c1097ce20f355ecd38a1812ce4df70beddab9499d7e0b3b2a8729002");
  return c;
}

const Fe& fe_d_minus_one_sq() {
  static const Fe c = from_le_hex("204ded44aa5aad3199191eb02c4a9ed2eb4e9b522fd3dc4c41226cf67ab36859");
  return c;
}

}  // namespace cbdc::crypto::detail
