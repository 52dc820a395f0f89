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

#include "cbdc/sim/vectors.hpp"

#include <map>
#include <sstream>

#include "cbdc/channel/frame.hpp"
#include "cbdc/crypto/hash.hpp"
#include "cbdc/crypto/pedersen.hpp"
#include "cbdc/crypto/suite.hpp"
#include "cbdc/crypto/transcript.hpp"
#include "cbdc/se/types.hpp"
#include "cbdc/zkp/bundle.hpp"
#include "cbdc/zkp/nullifier.hpp"
#include "cbdc/zkp/proofs.hpp"

namespace cbdc::sim {

using nlohmann::json;

namespace {

template <std::size_t N>
std::array<std::uint8_t, N> iota_bytes() {
  std::array<std::uint8_t, N> a{};
  for (std::size_t i = 0; i < N; ++i) a[i] = static_cast<std::uint8_t>(i);
  return a;
}

json vec(const std::string& name, json input, json output) {
  json j;
  j["name"] = name;
  j["input"] = std::move(input);
  j["output"] = std::move(output);
  return j;
}

}  // namespace

std::vector<json> compute_vectors() {
  std::vector<json> out;
  const auto& suite = crypto::active_suite();
  out.push_back(vec("suite", json::object(),
                    {{"suite_id", suite.suite_id},
                     {"name", std::string(suite.name)},
                     {"element_len", suite.element_len},
                     {"scalar_len", suite.scalar_len}}));

  {
    crypto::Transcript t("cbdc/vectors");
    out.push_back(vec("transcript/empty", {{"domain", "cbdc/vectors"}, {"label", "challenge"}},
                      to_hex(t.challenge("challenge").to_bytes())));
  }
  {
    crypto::Transcript t("cbdc/test");
    t.absorb("a", Bytes{1});
    out.push_back(vec("transcript/absorb",
                      {{"domain", "cbdc/test"}, {"absorb", {{"a", "01"}}}, {"label", "c"}},
                      to_hex(t.challenge("c").to_bytes())));
  }

  const auto& params = crypto::default_params();
  out.push_back(vec("generators", {{"tag", "cbdc/v1"}},
                    {{"g_val", to_hex(params.g_val().to_bytes())},
                     {"g_blind", to_hex(params.g_blind().to_bytes())}}));
  out.push_back(vec("pedersen/commit", {{"value", 7}, {"blinding", 10}},
                    to_hex(params.commit(7, crypto::Scalar::from_u64(10)).to_bytes())));

  Hash32 seed = iota_bytes<32>();
  zkp::Nullifier n = zkp::derive_nullifier(seed, 5);
  out.push_back(vec("nullifier", {{"prf_seed", to_hex(seed)}, {"counter", 5}},
                    {{"nullifier", to_hex(n)}, {"tx_id", to_hex(zkp::derive_tx_id(n))}}));

  se::DeviceId id = iota_bytes<16>();
  out.push_back(vec("log/genesis", {{"device_id", to_hex(id)}}, to_hex(se::log_genesis(id))));

  out.push_back(vec("crc32", {{"ascii", "123456789"}}, channel::crc32(as_bytes("123456789"))));
  out.push_back(vec("frame", {{"msg_type", 1}, {"payload_ascii", "hello"}},
                    to_hex(channel::encode_frame(1, as_bytes("hello")))));
  {
    channel::Chunk c{7, 0, 2, 0, Bytes{0xaa, 0xbb}};
    out.push_back(vec("chunk", {{"stream", 7}, {"seq", 0}, {"total", 2}, {"flags", 0}, {"data", "aabb"}},
                      to_hex(c.encode())));
  }

  json sizes = json::object();
  for (unsigned bits : {4u, 8u, 16u, 32u}) {
    sizes[std::to_string(bits)] = zkp::range_proof_analytic_size(bits);
  }
  out.push_back(vec("range_proof/analytic_size", {{"bits", {4, 8, 16, 32}}}, sizes));
  return out;
}

std::string vectors_jsonl() {
  std::string s;
  for (const auto& v : compute_vectors()) s += v.dump() + "\n";
  return s;
}

std::vector<std::string> check_vectors(const std::string& jsonl) {
  std::map<std::string, json> want;
  std::istringstream in(jsonl);
  std::string line;
  std::vector<std::string> bad;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.contains("name") || !j["name"].is_string()) {
      bad.push_back("<malformed line>");
      continue;
    }
    want[j["name"].get<std::string>()] = j;
  }
  for (const auto& v : compute_vectors()) {
    const std::string name = v["name"];
    auto it = want.find(name);
    if (it == want.end() || it->second != v) bad.push_back(name);
    if (it != want.end()) want.erase(it);
  }
  for (const auto& [name, _] : want) bad.push_back(name);
  return bad;
}

}  // namespace cbdc::sim
