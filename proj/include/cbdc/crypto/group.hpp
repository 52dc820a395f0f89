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
#include <memory>
#include <optional>
#include <span>

#include "cbdc/common/bytes.hpp"
#include "cbdc/crypto/detail/field25519.hpp"
#include "cbdc/crypto/scalar.hpp"

namespace cbdc::crypto {

namespace detail {
struct EdwardsPoint {
  Fe x, y, z, t;
};
}  // namespace detail

// Element of the ristretto255 prime-order group. Held in extended twisted
// Edwards coordinates; encoding happens only at the wire boundary.
class GroupElement {
 public:
  static constexpr std::size_t kEncodedSize = 32;
  using Encoded = std::array<std::uint8_t, kEncodedSize>;

  GroupElement();  // identity

  static GroupElement identity() { return GroupElement(); }
  static const GroupElement& base();
  // Canonical ristretto255 decoding; DecodeError on anything else.
  static GroupElement from_bytes(ByteView bytes);
  // One-way map from 64 uniform bytes (two Elligator evaluations).
  static GroupElement from_uniform_bytes(ByteView bytes64);

  Encoded to_bytes() const;
  bool is_identity() const;

  GroupElement operator+(const GroupElement& o) const;
  GroupElement operator-(const GroupElement& o) const;
  GroupElement operator-() const;
  GroupElement& operator+=(const GroupElement& o) { return *this = *this + o; }
  GroupElement& operator-=(const GroupElement& o) { return *this = *this - o; }
  GroupElement dbl() const;

  bool operator==(const GroupElement& o) const;

  const detail::EdwardsPoint& raw() const { return p_; }
  static GroupElement from_raw(const detail::EdwardsPoint& p) { return GroupElement(p); }

 private:
  explicit GroupElement(const detail::EdwardsPoint& p) : p_(p) {}
  Encoded encode_uncached() const;

  detail::EdwardsPoint p_;
  // Filled by decoding or the first to_bytes(); not thread-safe.
  mutable std::optional<Encoded> encoded_;
};

GroupElement operator*(const Scalar& k, const GroupElement& p);

// sum_i scalars[i] * points[i], sharing the doublings (Straus).
GroupElement multi_scalar_mul(std::span<const Scalar> scalars,
                              std::span<const GroupElement> points);

// Precomputed multiples j * 16^i * P for fast multiplication of a fixed
// point (generators, the signature base point).
class FixedBaseTable {
 public:
  explicit FixedBaseTable(const GroupElement& point);

  const GroupElement& point() const { return point_; }
  GroupElement mul(const Scalar& k) const;

 private:
  struct Cached {
    detail::Fe y_plus_x, y_minus_x, z, t2d;
  };
  GroupElement point_;
  std::array<std::array<Cached, 16>, 64> table_;
};

// Shared table for GroupElement::base().
const FixedBaseTable& base_table();

}  // namespace cbdc::crypto
