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

#include "cbdc/common/bytes.hpp"
#include "cbdc/crypto/group.hpp"
#include "cbdc/crypto/schnorr.hpp"

namespace cbdc::zkp {

// Offline spending policy carried by a certificate.
struct Limits {
  std::uint64_t cum_limit = 0;   // L
  std::uint64_t per_tx_cap = 0;  // T
  std::uint64_t max_tx = 0;      // K

  void encode(ByteWriter& w) const;
  static Limits decode(ByteReader& r);
  bool operator==(const Limits&) const = default;
};

// FI-signed binding of a device key to its limits and validity epoch.
struct WalletCertificate {
  static constexpr std::size_t kEncodedSize = 32 + 3 * 8 + 8 + crypto::Signature::kEncodedSize;

  crypto::GroupElement subject_pk;
  Limits limits;
  std::uint64_t expiry_epoch = 0;
  crypto::Signature fi_sig;

  Bytes signed_message() const;
  bool verify(const crypto::GroupElement& fi_pk) const;

  void encode(ByteWriter& w) const;
  static WalletCertificate decode(ByteReader& r);
  bool operator==(const WalletCertificate&) const = default;
};

WalletCertificate sign_certificate(const crypto::Scalar& fi_sk, const crypto::GroupElement& subject_pk,
                                   const Limits& limits, std::uint64_t expiry_epoch);

}  // namespace cbdc::zkp
