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

namespace cbdc::channel {

constexpr std::uint8_t kMagic0 = 0xCB;
constexpr std::uint8_t kMagic1 = 0xDC;
constexpr std::uint8_t kVersion = 0x01;
constexpr std::size_t kFrameHeaderSize = 8;  // magic 2, version 1, type 1, length 4
constexpr std::size_t kFrameOverhead = kFrameHeaderSize + 4;
constexpr std::size_t kMaxPayload = std::size_t{1} << 20;

struct Frame {
  std::uint8_t msg_type = 0;
  Bytes payload;

  bool operator==(const Frame&) const = default;
};

// CRC-32 (IEEE, reflected) via zlib.
std::uint32_t crc32(ByteView data);

// FrameTooLarge if the payload exceeds 2^20 bytes.
Bytes encode_frame(std::uint8_t msg_type, ByteView payload);

// BadMagic, UnknownVersion, IncompleteStream (length disagrees with the
// byte count) or ChecksumMismatch.
Frame decode_frame(ByteView bytes);

// Transport chunk: {stream id 4, seq 2, total 2, flags 2} then data.
constexpr std::size_t kChunkHeaderSize = 10;
constexpr std::size_t kMinMtu = 16;
constexpr std::uint16_t kFlagLast = 0x0001;

struct Chunk {
  std::uint32_t stream_id = 0;
  std::uint16_t seq = 0;
  std::uint16_t total = 0;
  std::uint16_t flags = 0;
  Bytes data;

  Bytes encode() const;
  static Chunk decode(ByteView bytes);
  bool operator==(const Chunk&) const = default;
};

// Each chunk is at most mtu bytes. ValueInvalid if mtu < 16.
std::vector<Bytes> chunk_for_mtu(ByteView frame_bytes, std::size_t mtu, std::uint32_t stream_id = 0);

// Orders by seq and drops duplicate chunks. IncompleteStream if any
// chunk is missing or the chunks disagree on stream or total.
Bytes reassemble(const std::vector<Bytes>& chunks);

}  // namespace cbdc::channel
