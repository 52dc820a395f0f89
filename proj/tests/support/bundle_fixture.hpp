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
#include <string>

#include "cbdc/crypto/hash.hpp"
#include "cbdc/zkp/bundle.hpp"

namespace cbdc::testing {

struct HonestPayment {
  crypto::KeyPair fi;
  zkp::ProverView view;
  zkp::PublicInputs pub;
  zkp::ComplianceBundle bundle;
};

struct PaymentParams {
  std::uint64_t balance = 5000;
  std::uint64_t cum = 0;
  std::uint64_t limit = 10000;
  std::uint64_t cap = 2000;
  std::uint64_t amount = 1200;
  std::uint64_t counter = 1;
  std::uint64_t epoch = 1;
  std::uint64_t expiry = 10;
};

inline zkp::PublicInputs make_public_inputs(const crypto::KeyPair& fi, const zkp::ProverView& view,
                                            const PaymentParams& p) {
  const auto& params = crypto::default_params();
  zkp::PublicInputs pub;
  pub.c_balance_before = params.commit(view.balance, view.r_balance);
  pub.c_cum_before = params.commit(view.cum_spent, view.r_cum);
  pub.amount = p.amount;
  pub.limit = p.limit;
  pub.per_tx_cap = p.cap;
  pub.certificate =
      zkp::sign_certificate(fi.sk, view.keys.pk, {p.limit, p.cap, 64}, p.expiry);
  pub.tx_id = zkp::derive_tx_id(zkp::derive_nullifier(view.prf_seed, view.counter));
  pub.epoch = p.epoch;
  return pub;
}

inline zkp::ProverView make_view(const std::string& tag, const PaymentParams& p) {
  zkp::ProverView view;
  view.keys = crypto::KeyPair::derive(as_bytes("device/" + tag));
  view.prf_seed = crypto::sha256(as_bytes("prf/" + tag));
  view.counter = p.counter;
  view.balance = p.balance;
  view.r_balance = crypto::hash_to_scalar({as_bytes("rbal/" + tag)});
  view.cum_spent = p.cum;
  view.r_cum = crypto::hash_to_scalar({as_bytes("rcum/" + tag)});
  return view;
}

inline HonestPayment make_payment(const std::string& tag, const PaymentParams& p = {}) {
  HonestPayment h;
  h.fi = crypto::KeyPair::derive(as_bytes("fi"));
  h.view = make_view(tag, p);
  h.pub = make_public_inputs(h.fi, h.view, p);
  h.bundle = zkp::build_compliance_bundle(h.view, h.pub);
  return h;
}

}  // namespace cbdc::testing
