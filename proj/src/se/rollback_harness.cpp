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

#include "cbdc/se/rollback_harness.hpp"

#include "cbdc/common/error.hpp"

namespace cbdc::se {

void RollbackHarness::snapshot(const SecureElement& se) { saved_ = se.s_; }

void RollbackHarness::restore(SecureElement& se) const {
  if (!saved_) fail(ErrorCode::NoSnapshot, "restore without snapshot");
  se.s_ = *saved_;
}

}  // namespace cbdc::se
