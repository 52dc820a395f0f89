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

#include "cbdc/crypto/pedersen.hpp"

#include "cbdc/common/error.hpp"
#include "cbdc/crypto/hash.hpp"
#include "cbdc/crypto/suite.hpp"

namespace cbdc::crypto {

namespace {

GroupElement hash_to_group(std::string_view tag, std::string_view label,
                           const GroupElement* avoid) {
  for (std::uint32_t attempt = 0;; ++attempt) {
    ByteWriter w;
    w.raw("cbdc/h2g/v1").u8(active_suite().suite_id).var(tag).var(label).u32(attempt);
    GroupElement candidate = GroupElement::from_uniform_bytes(sha512(w.bytes()));
    if (candidate.is_identity()) continue;
    if (avoid != nullptr && candidate == *avoid) continue;
    return candidate;
  }
}

}  // namespace

PedersenParams::PedersenParams(const GroupElement& g_val, const GroupElement& g_blind)
    : val_(std::make_shared<const FixedBaseTable>(g_val)),
      blind_(std::make_shared<const FixedBaseTable>(g_blind)) {}

GroupElement PedersenParams::commit(const Scalar& value, const Scalar& blinding) const {
  return val_->mul(value) + blind_->mul(blinding);
}

PedersenParams derive_generators(std::string_view domain_tag) {
  if (domain_tag.empty()) fail(ErrorCode::ValueInvalid, "empty generator domain tag");
  GroupElement g_val = hash_to_group(domain_tag, "value", nullptr);
  GroupElement g_blind = hash_to_group(domain_tag, "blind", &g_val);
  return PedersenParams(g_val, g_blind);
}

const PedersenParams& default_params() {
  static const PedersenParams params = derive_generators("cbdc/v1");
  return params;
}

}  // namespace cbdc::crypto
