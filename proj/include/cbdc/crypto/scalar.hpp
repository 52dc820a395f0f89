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
#include <initializer_list>
#include <string_view>

#include "cbdc/common/bytes.hpp"

namespace cbdc::crypto {

// Integer modulo the ristretto255 group order
// q = 2^252 + 27742317777372353535851937790883648493.
// Canonical encoding is 32 bytes big-endian; internally little-endian.
class Scalar {
 public:
  static constexpr std::size_t kEncodedSize = 32;
  using Encoded = std::array<std::uint8_t, kEncodedSize>;

  Scalar() = default;  // zero

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return from_u64(1); }
  static Scalar from_u64(std::uint64_t v);
  // Rejects values >= q with DecodeError.
  static Scalar from_bytes(ByteView be);
  // Interprets 64 bytes big-endian and reduces mod q.
  static Scalar from_wide_be(ByteView be64);

  Encoded to_bytes() const;
  const std::array<std::uint8_t, 32>& le_bytes() const { return le_; }

  bool is_zero() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const { return le_ == o.le_; }

 private:
  std::array<std::uint8_t, 32> le_{};
};

// SHA-512 of the concatenated parts, read big-endian, reduced mod q.
Scalar hash_to_scalar(std::initializer_list<ByteView> parts);

}  // namespace cbdc::crypto
