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

#include "cbdc/crypto/group.hpp"

#include <algorithm>
#include <vector>

#include "cbdc/common/error.hpp"

namespace cbdc::crypto {

using namespace detail;

namespace {

struct CachedPoint {
  Fe y_plus_x, y_minus_x, z, t2d;
};

// (X:Z, Y:T) completed coordinates.
struct Completed {
  Fe x, y, z, t;
};

EdwardsPoint to_extended(const Completed& c) {
  return {fe_mul(c.x, c.t), fe_mul(c.y, c.z), fe_mul(c.z, c.t), fe_mul(c.x, c.y)};
}

CachedPoint to_cached(const EdwardsPoint& p) {
  return {fe_add(p.y, p.x), fe_sub(p.y, p.x), p.z, fe_mul(p.t, fe_d2())};
}

EdwardsPoint add_cached(const EdwardsPoint& p, const CachedPoint& q, bool subtract) {
  Completed r;
  Fe ypx = fe_add(p.y, p.x);
  Fe ymx = fe_sub(p.y, p.x);
  Fe a = fe_mul(ypx, subtract ? q.y_minus_x : q.y_plus_x);
  Fe b = fe_mul(ymx, subtract ? q.y_plus_x : q.y_minus_x);
  Fe c = fe_mul(q.t2d, p.t);
  Fe zz = fe_mul(p.z, q.z);
  Fe d = fe_add(zz, zz);
  r.x = fe_sub(a, b);
  r.y = fe_add(a, b);
  r.z = subtract ? fe_sub(d, c) : fe_add(d, c);
  r.t = subtract ? fe_add(d, c) : fe_sub(d, c);
  return to_extended(r);
}

// Doubling ignores T, so chained doublings only need X, Y, Z.
Completed dbl_completed(const EdwardsPoint& p) {
  Completed r;
  Fe xx = fe_sq(p.x);
  Fe yy = fe_sq(p.y);
  Fe zz2 = fe_sq(p.z);
  zz2 = fe_add(zz2, zz2);
  Fe xy2 = fe_sq(fe_add(p.x, p.y));
  r.y = fe_add(yy, xx);
  r.z = fe_sub(yy, xx);
  r.x = fe_sub(xy2, r.y);
  r.t = fe_sub(zz2, r.z);
  return r;
}

EdwardsPoint dbl(const EdwardsPoint& p) { return to_extended(dbl_completed(p)); }

EdwardsPoint dbl4(EdwardsPoint p) {
  for (int i = 0; i < 3; ++i) {
    Completed c = dbl_completed(p);
    p.x = fe_mul(c.x, c.t);
    p.y = fe_mul(c.y, c.z);
    p.z = fe_mul(c.z, c.t);
  }
  return dbl(p);
}

// Cached multiples 1..15 of p; entry 0 is unused.
std::array<CachedPoint, 16> small_multiples(const EdwardsPoint& p) {
  std::array<CachedPoint, 16> table;
  EdwardsPoint multiple = p;
  table[1] = to_cached(p);
  for (int j = 2; j < 16; ++j) {
    multiple = add_cached(multiple, table[1], false);
    table[j] = to_cached(multiple);
  }
  return table;
}

EdwardsPoint identity_point() { return {fe_zero(), fe_one(), fe_one(), fe_zero()}; }

// Elligator map used by from_uniform_bytes.
EdwardsPoint elligator(const Fe& t) {
  const Fe one = fe_one();
  Fe r = fe_mul(fe_sqrt_m1(), fe_sq(t));
  Fe u = fe_mul(fe_add(r, one), fe_one_minus_d_sq());
  Fe v = fe_mul(fe_sub(fe_neg(one), fe_mul(r, fe_d())), fe_add(r, fe_d()));

  SqrtRatio sr = fe_sqrt_ratio_m1(u, v);
  Fe s = sr.root;
  Fe s_prime = fe_neg(fe_abs(fe_mul(s, t)));
  Fe c = fe_neg(one);
  if (!sr.was_square) {
    s = s_prime;
    c = r;
  }

  Fe n = fe_sub(fe_mul(fe_mul(c, fe_sub(r, one)), fe_d_minus_one_sq()), v);
  Fe w0 = fe_mul(fe_add(s, s), v);
  Fe w1 = fe_mul(n, fe_sqrt_ad_minus_one());
  Fe ss = fe_sq(s);
  Fe w2 = fe_sub(one, ss);
  Fe w3 = fe_add(one, ss);
  return {fe_mul(w0, w3), fe_mul(w2, w1), fe_mul(w1, w3), fe_mul(w0, w2)};
}

std::array<std::uint8_t, 64> nibbles(const Scalar& k) {
  std::array<std::uint8_t, 64> out{};
  const auto& le = k.le_bytes();
  for (int i = 0; i < 32; ++i) {
    out[2 * i] = le[i] & 0x0f;
    out[2 * i + 1] = le[i] >> 4;
  }
  return out;
}

}  // namespace

GroupElement::GroupElement() : p_(identity_point()) {}

const GroupElement& GroupElement::base() {
  static const GroupElement b = GroupElement::from_bytes(array_from_hex<32>(
      "e2f2ae0a6abc4e71a884a961c500515f58e30b6aa582dd8db6a65945e08d2d76"));
  return b;
}

GroupElement GroupElement::from_bytes(ByteView bytes) {
  if (bytes.size() != kEncodedSize) throw_length(kEncodedSize, bytes.size());
  Fe s = fe_from_bytes(bytes.data());
  auto canonical = fe_to_bytes(s);
  if (!std::equal(canonical.begin(), canonical.end(), bytes.begin()) || fe_is_negative(s)) {
    fail(ErrorCode::DecodeError, "non-canonical group element");
  }

  const Fe one = fe_one();
  Fe ss = fe_sq(s);
  Fe u1 = fe_sub(one, ss);
  Fe u2 = fe_add(one, ss);
  Fe u2_sq = fe_sq(u2);
  Fe v = fe_sub(fe_neg(fe_mul(fe_d(), fe_sq(u1))), u2_sq);

  SqrtRatio sr = fe_sqrt_ratio_m1(one, fe_mul(v, u2_sq));
  Fe den_x = fe_mul(sr.root, u2);
  Fe den_y = fe_mul(fe_mul(sr.root, den_x), v);

  Fe x = fe_abs(fe_mul(fe_add(s, s), den_x));
  Fe y = fe_mul(u1, den_y);
  Fe t = fe_mul(x, y);
  if (!sr.was_square || fe_is_negative(t) || fe_is_zero(y)) {
    fail(ErrorCode::DecodeError, "invalid group element");
  }
  GroupElement out(EdwardsPoint{x, y, one, t});
  out.encoded_.emplace();
  std::copy(bytes.begin(), bytes.end(), out.encoded_->begin());
  return out;
}

GroupElement GroupElement::from_uniform_bytes(ByteView bytes64) {
  if (bytes64.size() != 64) throw_length(64, bytes64.size());
  EdwardsPoint p1 = elligator(fe_from_bytes(bytes64.data()));
  EdwardsPoint p2 = elligator(fe_from_bytes(bytes64.data() + 32));
  return GroupElement(add_cached(p1, to_cached(p2), false));
}

GroupElement::Encoded GroupElement::to_bytes() const {
  if (!encoded_) encoded_ = encode_uncached();
  return *encoded_;
}

GroupElement::Encoded GroupElement::encode_uncached() const {
  const EdwardsPoint& p = p_;
  Fe u1 = fe_mul(fe_add(p.z, p.y), fe_sub(p.z, p.y));
  Fe u2 = fe_mul(p.x, p.y);
  SqrtRatio sr = fe_sqrt_ratio_m1(fe_one(), fe_mul(u1, fe_sq(u2)));
  Fe den1 = fe_mul(sr.root, u1);
  Fe den2 = fe_mul(sr.root, u2);
  Fe z_inv = fe_mul(fe_mul(den1, den2), p.t);

  Fe x = p.x;
  Fe y = p.y;
  Fe den_inv = den2;
  if (fe_is_negative(fe_mul(p.t, z_inv))) {
    x = fe_mul(p.y, fe_sqrt_m1());
    y = fe_mul(p.x, fe_sqrt_m1());
    den_inv = fe_mul(den1, fe_invsqrt_a_minus_d());
  }
  if (fe_is_negative(fe_mul(x, z_inv))) y = fe_neg(y);
  Fe s = fe_abs(fe_mul(den_inv, fe_sub(p.z, y)));
  return fe_to_bytes(s);
}

bool GroupElement::is_identity() const { return *this == GroupElement(); }

GroupElement GroupElement::operator+(const GroupElement& o) const {
  return GroupElement(add_cached(p_, to_cached(o.p_), false));
}

GroupElement GroupElement::operator-(const GroupElement& o) const {
  return GroupElement(add_cached(p_, to_cached(o.p_), true));
}

GroupElement GroupElement::operator-() const {
  return GroupElement(EdwardsPoint{fe_neg(p_.x), p_.y, p_.z, fe_neg(p_.t)});
}

GroupElement GroupElement::dbl() const { return GroupElement(crypto::dbl(p_)); }

bool GroupElement::operator==(const GroupElement& o) const {
  return fe_equal(fe_mul(p_.x, o.p_.y), fe_mul(p_.y, o.p_.x)) ||
         fe_equal(fe_mul(p_.y, o.p_.y), fe_mul(p_.x, o.p_.x));
}

GroupElement operator*(const Scalar& k, const GroupElement& p) {
  return multi_scalar_mul(std::span<const Scalar>(&k, 1), std::span<const GroupElement>(&p, 1));
}

GroupElement multi_scalar_mul(std::span<const Scalar> scalars,
                              std::span<const GroupElement> points) {
  if (scalars.size() != points.size()) {
    fail(ErrorCode::LengthMismatch, "multi_scalar_mul: scalar and point counts differ");
  }
  const std::size_t n = points.size();
  std::vector<std::array<CachedPoint, 16>> tables(n);
  std::vector<std::array<std::uint8_t, 64>> digits(n);
  for (std::size_t i = 0; i < n; ++i) {
    tables[i] = small_multiples(points[i].raw());
    digits[i] = nibbles(scalars[i]);
  }

  EdwardsPoint acc = identity_point();
  bool started = false;
  for (int w = 63; w >= 0; --w) {
    if (started) acc = dbl4(acc);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint8_t d = digits[i][w];
      if (d == 0) continue;
      acc = add_cached(acc, tables[i][d], false);
      started = true;
    }
  }
  return GroupElement::from_raw(acc);
}

FixedBaseTable::FixedBaseTable(const GroupElement& point) : point_(point) {
  EdwardsPoint window_base = point.raw();
  for (auto& row : table_) {
    CachedPoint step = to_cached(window_base);
    EdwardsPoint multiple = window_base;
    row[0] = {};
    row[1] = {step.y_plus_x, step.y_minus_x, step.z, step.t2d};
    for (int j = 2; j < 16; ++j) {
      multiple = add_cached(multiple, step, false);
      CachedPoint c = to_cached(multiple);
      row[j] = {c.y_plus_x, c.y_minus_x, c.z, c.t2d};
    }
    window_base = dbl4(window_base);
  }
}

GroupElement FixedBaseTable::mul(const Scalar& k) const {
  auto digits = nibbles(k);
  EdwardsPoint acc = identity_point();
  for (int i = 0; i < 64; ++i) {
    if (digits[i] == 0) continue;
    const auto& e = table_[i][digits[i]];
    acc = add_cached(acc, CachedPoint{e.y_plus_x, e.y_minus_x, e.z, e.t2d}, false);
  }
  return GroupElement::from_raw(acc);
}

const FixedBaseTable& base_table() {
  static const FixedBaseTable t(GroupElement::base());
  return t;
}

}  // namespace cbdc::crypto
