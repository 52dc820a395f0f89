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

#include "cbdc/crypto/scalar.hpp"

#include <sodium.h>

#include <algorithm>

#include "cbdc/common/error.hpp"
#include "cbdc/crypto/hash.hpp"

namespace cbdc::crypto {

namespace {

// q, little-endian.
constexpr std::array<std::uint8_t, 32> kOrderLe = {
    0xed, 0xd3, 0xf5, 0x5c, 0x1a, 0x63, 0x12, 0x58, 0xd6, 0x9c, 0xf7, 0xa2, 0xde, 0xf9, 0xde, 0x14,
    0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x10};

bool less_than_order(const std::array<std::uint8_t, 32>& le) {
  for (int i = 31; i >= 0; --i) {
    if (le[i] < kOrderLe[i]) return true;
    if (le[i] > kOrderLe[i]) return false;
  }
  return false;
}

}  // namespace

Scalar Scalar::from_u64(std::uint64_t v) {
  Scalar s;
  for (int i = 0; i < 8; ++i) s.le_[i] = static_cast<std::uint8_t>(v >> (8 * i));
  return s;
}

Scalar Scalar::from_bytes(ByteView be) {
  if (be.size() != kEncodedSize) throw_length(kEncodedSize, be.size());
  Scalar s;
  std::reverse_copy(be.begin(), be.end(), s.le_.begin());
  if (!less_than_order(s.le_)) fail(ErrorCode::DecodeError, "non-canonical scalar");
  return s;
}

Scalar Scalar::from_wide_be(ByteView be64) {
  if (be64.size() != 64) throw_length(64, be64.size());
  ensure_sodium();
  std::array<std::uint8_t, 64> le{};
  std::reverse_copy(be64.begin(), be64.end(), le.begin());
  Scalar s;
  crypto_core_ristretto255_scalar_reduce(s.le_.data(), le.data());
  return s;
}

Scalar::Encoded Scalar::to_bytes() const {
  Encoded out{};
  std::reverse_copy(le_.begin(), le_.end(), out.begin());
  return out;
}

bool Scalar::is_zero() const {
  return std::all_of(le_.begin(), le_.end(), [](std::uint8_t b) { return b == 0; });
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r;
  crypto_core_ristretto255_scalar_add(r.le_.data(), le_.data(), o.le_.data());
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r;
  crypto_core_ristretto255_scalar_sub(r.le_.data(), le_.data(), o.le_.data());
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r;
  crypto_core_ristretto255_scalar_mul(r.le_.data(), le_.data(), o.le_.data());
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r;
  crypto_core_ristretto255_scalar_negate(r.le_.data(), le_.data());
  return r;
}

Scalar hash_to_scalar(std::initializer_list<ByteView> parts) {
  Sha512 h;
  for (ByteView p : parts) h.update(p);
  Hash64 d = h.finish();
  return Scalar::from_wide_be(d);
}

}  // namespace cbdc::crypto
