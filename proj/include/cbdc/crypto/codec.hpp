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

#include "cbdc/common/bytes.hpp"
#include "cbdc/crypto/group.hpp"
#include "cbdc/crypto/scalar.hpp"
#include "cbdc/crypto/schnorr.hpp"

namespace cbdc::crypto {

inline void write_point(ByteWriter& w, const GroupElement& p) { w.raw(p.to_bytes()); }
inline void write_scalar(ByteWriter& w, const Scalar& s) { w.raw(s.to_bytes()); }
inline void write_signature(ByteWriter& w, const Signature& s) { w.raw(s.to_bytes()); }

inline GroupElement read_point(ByteReader& r) {
  return GroupElement::from_bytes(r.raw(GroupElement::kEncodedSize));
}
inline Scalar read_scalar(ByteReader& r) { return Scalar::from_bytes(r.raw(Scalar::kEncodedSize)); }
inline Signature read_signature(ByteReader& r) {
  return Signature::from_bytes(r.raw(Signature::kEncodedSize));
}

}  // namespace cbdc::crypto
