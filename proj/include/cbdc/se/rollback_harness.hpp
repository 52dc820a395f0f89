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

#include <optional>

#include "cbdc/se/secure_element.hpp"

namespace cbdc::se {

// Test and simulation only: models cloning or rolling back an SE. Lives in
// its own library so production targets cannot link it by accident.
class RollbackHarness {
 public:
  void snapshot(const SecureElement& se);
  // NoSnapshot if nothing was captured.
  void restore(SecureElement& se) const;
  bool has_snapshot() const { return saved_.has_value(); }

 private:
  std::optional<SecureElement::State> saved_;
};

}  // namespace cbdc::se
