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

#include "cbdc/common/bytes.hpp"

#include "cbdc/common/error.hpp"

namespace cbdc {

std::string to_hex(ByteView data) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (std::uint8_t b : data) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0x0f]);
  }
  return out;
}

namespace {
int nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}
}  // namespace

Bytes from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) fail(ErrorCode::DecodeError, "odd-length hex");
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    int hi = nibble(hex[2 * i]);
    int lo = nibble(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) fail(ErrorCode::DecodeError, "non-hex character");
    out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return out;
}

void throw_length(std::size_t expected, std::size_t got) {
  fail(ErrorCode::DecodeError,
       "expected " + std::to_string(expected) + " bytes, got " + std::to_string(got));
}

ByteWriter& ByteWriter::u8(std::uint8_t v) {
  buf_.push_back(v);
  return *this;
}

ByteWriter& ByteWriter::u16(std::uint16_t v) {
  buf_.push_back(static_cast<std::uint8_t>(v >> 8));
  buf_.push_back(static_cast<std::uint8_t>(v));
  return *this;
}

ByteWriter& ByteWriter::u32(std::uint32_t v) {
  for (int s = 24; s >= 0; s -= 8) buf_.push_back(static_cast<std::uint8_t>(v >> s));
  return *this;
}

ByteWriter& ByteWriter::u64(std::uint64_t v) {
  for (int s = 56; s >= 0; s -= 8) buf_.push_back(static_cast<std::uint8_t>(v >> s));
  return *this;
}

ByteWriter& ByteWriter::raw(ByteView data) {
  buf_.insert(buf_.end(), data.begin(), data.end());
  return *this;
}

ByteWriter& ByteWriter::var(ByteView data) {
  count(data.size());
  return raw(data);
}

ByteWriter& ByteWriter::count(std::size_t n) {
  if (n > 0xffffffffu) fail(ErrorCode::LengthMismatch, "count exceeds 32 bits");
  return u32(static_cast<std::uint32_t>(n));
}

ByteView ByteReader::raw(std::size_t n) {
  if (n > remaining()) fail(ErrorCode::DecodeError, "truncated input");
  ByteView v = data_.subspan(pos_, n);
  pos_ += n;
  return v;
}

std::uint8_t ByteReader::u8() { return raw(1)[0]; }

std::uint16_t ByteReader::u16() {
  ByteView v = raw(2);
  return static_cast<std::uint16_t>((v[0] << 8) | v[1]);
}

std::uint32_t ByteReader::u32() {
  ByteView v = raw(4);
  std::uint32_t out = 0;
  for (std::uint8_t b : v) out = (out << 8) | b;
  return out;
}

std::uint64_t ByteReader::u64() {
  ByteView v = raw(8);
  std::uint64_t out = 0;
  for (std::uint8_t b : v) out = (out << 8) | b;
  return out;
}

Bytes ByteReader::var() {
  std::size_t n = count(1);
  ByteView v = raw(n);
  return Bytes(v.begin(), v.end());
}

std::size_t ByteReader::count(std::size_t min_item_size) {
  std::size_t n = u32();
  if (min_item_size > 0 && n > remaining() / min_item_size) {
    fail(ErrorCode::DecodeError, "count larger than remaining input");
  }
  return n;
}

void ByteReader::expect_end() const {
  if (!empty()) fail(ErrorCode::DecodeError, "trailing bytes");
}

}  // namespace cbdc
