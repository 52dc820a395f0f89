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

#include <stdexcept>
#include <string>
#include <string_view>

namespace cbdc {

// Every domain failure surfaced by the library. Verification routines that
// reach a verdict return an outcome instead of throwing; these codes are for
// refused operations and malformed input.
enum class ErrorCode {
  DecodeError,
  InvalidWitness,
  OutOfRange,
  LengthMismatch,
  ValueInvalid,
  InsufficientFunds,
  LimitExceeded,
  CounterExhausted,
  CredentialExpired,
  ProvisionMismatch,
  AllocationInvalid,
  ExceedsDeviceLimit,
  LogCorrupt,
  NoSnapshot,
  Insufficient,
  UnknownDevice,
  UnknownCustomer,
  PolicyBound,
  GrantInvalid,
  ScopeUnknown,
  ChainMismatch,
  ChecksumMismatch,
  BadMagic,
  UnknownVersion,
  IncompleteStream,
  FrameTooLarge,
  SignatureInvalid,
  UnknownTx,
  DeviceFrozen,
  ScenarioInvalid,
  UnknownSuite,
  TxVoided,
  TxCommitted,
  Denied,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& detail = {});

}  // namespace cbdc
