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
#include <memory>
#include <string_view>

#include "cbdc/crypto/group.hpp"
#include "cbdc/crypto/scalar.hpp"

namespace cbdc::crypto {

// Value and blinding generators. Both come out of hash-to-group, so nobody
// knows a discrete-log relation between them.
class PedersenParams {
 public:
  PedersenParams(const GroupElement& g_val, const GroupElement& g_blind);

  const GroupElement& g_val() const { return val_->point(); }
  const GroupElement& g_blind() const { return blind_->point(); }

  GroupElement value_term(const Scalar& v) const { return val_->mul(v); }
  GroupElement blind_term(const Scalar& r) const { return blind_->mul(r); }
  GroupElement commit(const Scalar& value, const Scalar& blinding) const;
  GroupElement commit(std::uint64_t value, const Scalar& blinding) const {
    return commit(Scalar::from_u64(value), blinding);
  }

 private:
  std::shared_ptr<const FixedBaseTable> val_;
  std::shared_ptr<const FixedBaseTable> blind_;
};

// Requires a non-empty tag. Deterministic in (suite_id, tag).
PedersenParams derive_generators(std::string_view domain_tag);

// Generators for tag "cbdc/v1", built once per process.
const PedersenParams& default_params();

inline GroupElement pedersen_commit(const Scalar& value, const Scalar& blinding,
                                    const PedersenParams& params) {
  return params.commit(value, blinding);
}

}  // namespace cbdc::crypto
