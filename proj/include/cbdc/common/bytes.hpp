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

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cbdc {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;
using Hash32 = std::array<std::uint8_t, 32>;

inline ByteView as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

std::string to_hex(ByteView data);
Bytes from_hex(std::string_view hex);  // throws DecodeError

[[noreturn]] void throw_length(std::size_t expected, std::size_t got);

template <std::size_t N>
std::array<std::uint8_t, N> array_from_hex(std::string_view hex) {
  Bytes b = from_hex(hex);
  std::array<std::uint8_t, N> out{};
  if (b.size() != N) {
    throw_length(N, b.size());
  }
  std::copy(b.begin(), b.end(), out.begin());
  return out;
}

// Big-endian, length-prefixed canonical writer used by every wire format.
class ByteWriter {
 public:
  ByteWriter& u8(std::uint8_t v);
  ByteWriter& u16(std::uint16_t v);
  ByteWriter& u32(std::uint32_t v);
  ByteWriter& u64(std::uint64_t v);
  ByteWriter& raw(ByteView data);
  ByteWriter& raw(std::string_view data) { return raw(as_bytes(data)); }
  // 4-byte big-endian length followed by the data.
  ByteWriter& var(ByteView data);
  ByteWriter& var(std::string_view data) { return var(as_bytes(data)); }
  ByteWriter& count(std::size_t n);

  const Bytes& bytes() const& { return buf_; }
  Bytes take() && { return std::move(buf_); }
  std::size_t size() const { return buf_.size(); }

 private:
  Bytes buf_;
};

// Reader counterpart; any underflow raises DecodeError.
class ByteReader {
 public:
  explicit ByteReader(ByteView data) : data_(data) {}

  std::uint8_t u8();
  std::uint16_t u16();
  std::uint32_t u32();
  std::uint64_t u64();
  ByteView raw(std::size_t n);
  Bytes var();
  // Reads a 4-byte count and rejects values that cannot fit in the input.
  std::size_t count(std::size_t min_item_size = 1);

  template <std::size_t N>
  std::array<std::uint8_t, N> fixed() {
    ByteView v = raw(N);
    std::array<std::uint8_t, N> out{};
    std::copy(v.begin(), v.end(), out.begin());
    return out;
  }

  std::size_t remaining() const { return data_.size() - pos_; }
  bool empty() const { return remaining() == 0; }
  void expect_end() const;

 private:
  ByteView data_;
  std::size_t pos_ = 0;
};

}  // namespace cbdc

namespace cbdc {

// Types with `void encode(ByteWriter&) const` and `static T decode(ByteReader&)`.
template <class T>
Bytes encode_to_bytes(const T& value) {
  ByteWriter w;
  value.encode(w);
  return std::move(w).take();
}

// Decodes exactly one value; trailing bytes are a DecodeError.
template <class T>
T decode_from_bytes(ByteView data) {
  ByteReader r(data);
  T value = T::decode(r);
  r.expect_end();
  return value;
}

}  // namespace cbdc
