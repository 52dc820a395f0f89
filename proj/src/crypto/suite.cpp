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

#include "cbdc/crypto/suite.hpp"

#include <string>

#include "cbdc/common/error.hpp"

namespace cbdc::crypto {

const SuiteHeader& suite_by_id(std::uint8_t id) {
  if (id == kRistretto255Sha512.suite_id) return kRistretto255Sha512;
  fail(ErrorCode::UnknownSuite, "suite id " + std::to_string(id));
}

}  // namespace cbdc::crypto
