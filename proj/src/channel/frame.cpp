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

#include "cbdc/channel/frame.hpp"

#include <zlib.h>

#include <algorithm>
#include <map>

#include "cbdc/common/error.hpp"

namespace cbdc::channel {

std::uint32_t crc32(ByteView data) {
  uLong crc = ::crc32(0L, Z_NULL, 0);
  // zlib takes uInt lengths; frames stay far below that.
  crc = ::crc32(crc, data.data(), static_cast<uInt>(data.size()));
  return static_cast<std::uint32_t>(crc);
}

Bytes encode_frame(std::uint8_t msg_type, ByteView payload) {
  if (payload.size() > kMaxPayload) {
    fail(ErrorCode::FrameTooLarge, "payload of " + std::to_string(payload.size()) + " bytes");
  }
  ByteWriter w;
  w.u8(kMagic0).u8(kMagic1).u8(kVersion).u8(msg_type);
  w.u32(static_cast<std::uint32_t>(payload.size())).raw(payload);
  w.u32(crc32(w.bytes()));
  return std::move(w).take();
}

Frame decode_frame(ByteView bytes) {
  if (bytes.size() < 2 || bytes[0] != kMagic0 || bytes[1] != kMagic1) {
    fail(ErrorCode::BadMagic);
  }
  if (bytes.size() < 3 || bytes[2] != kVersion) fail(ErrorCode::UnknownVersion);
  if (bytes.size() < kFrameOverhead) fail(ErrorCode::IncompleteStream, "short frame");
  ByteReader r(bytes);
  r.raw(3);
  Frame f;
  f.msg_type = r.u8();
  std::uint32_t length = r.u32();
  if (length > kMaxPayload) fail(ErrorCode::FrameTooLarge);
  if (bytes.size() != kFrameOverhead + length) {
    fail(ErrorCode::IncompleteStream, "frame length disagrees with byte count");
  }
  ByteView body = bytes.first(kFrameHeaderSize + length);
  ByteView payload = r.raw(length);
  if (r.u32() != crc32(body)) fail(ErrorCode::ChecksumMismatch);
  f.payload.assign(payload.begin(), payload.end());
  return f;
}

Bytes Chunk::encode() const {
  ByteWriter w;
  w.u32(stream_id).u16(seq).u16(total).u16(flags).raw(data);
  return std::move(w).take();
}

Chunk Chunk::decode(ByteView bytes) {
  if (bytes.size() < kChunkHeaderSize) fail(ErrorCode::IncompleteStream, "short chunk");
  ByteReader r(bytes);
  Chunk c;
  c.stream_id = r.u32();
  c.seq = r.u16();
  c.total = r.u16();
  c.flags = r.u16();
  ByteView rest = r.raw(r.remaining());
  c.data.assign(rest.begin(), rest.end());
  return c;
}

std::vector<Bytes> chunk_for_mtu(ByteView frame_bytes, std::size_t mtu, std::uint32_t stream_id) {
  if (mtu < kMinMtu) fail(ErrorCode::ValueInvalid, "mtu below 16");
  const std::size_t capacity = mtu - kChunkHeaderSize;
  const std::size_t total = std::max<std::size_t>(1, (frame_bytes.size() + capacity - 1) / capacity);
  if (total > 0xffff) fail(ErrorCode::FrameTooLarge, "too many chunks");
  std::vector<Bytes> out;
  out.reserve(total);
  for (std::size_t i = 0; i < total; ++i) {
    Chunk c;
    c.stream_id = stream_id;
    c.seq = static_cast<std::uint16_t>(i);
    c.total = static_cast<std::uint16_t>(total);
    c.flags = i + 1 == total ? kFlagLast : 0;
    std::size_t begin = i * capacity;
    std::size_t end = std::min(frame_bytes.size(), begin + capacity);
    c.data.assign(frame_bytes.begin() + begin, frame_bytes.begin() + end);
    out.push_back(c.encode());
  }
  return out;
}

Bytes reassemble(const std::vector<Bytes>& chunks) {
  if (chunks.empty()) fail(ErrorCode::IncompleteStream, "no chunks");
  std::map<std::uint16_t, Chunk> by_seq;
  std::uint32_t stream = 0;
  std::uint16_t total = 0;
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    Chunk c = Chunk::decode(chunks[i]);
    if (i == 0) {
      stream = c.stream_id;
      total = c.total;
    } else if (c.stream_id != stream || c.total != total) {
      fail(ErrorCode::IncompleteStream, "chunks from different streams");
    }
    by_seq.emplace(c.seq, std::move(c));
  }
  if (total == 0 || by_seq.size() != total || by_seq.rbegin()->first != total - 1) {
    fail(ErrorCode::IncompleteStream, "missing chunk");
  }
  Bytes out;
  for (const auto& [seq, c] : by_seq) out.insert(out.end(), c.data.begin(), c.data.end());
  return out;
}

}  // namespace cbdc::channel
