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

#include "cbdc/common/error.hpp"

namespace cbdc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DecodeError: return "DecodeError";
    case ErrorCode::InvalidWitness: return "InvalidWitness";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ValueInvalid: return "ValueInvalid";
    case ErrorCode::InsufficientFunds: return "InsufficientFunds";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::CounterExhausted: return "CounterExhausted";
    case ErrorCode::CredentialExpired: return "CredentialExpired";
    case ErrorCode::ProvisionMismatch: return "ProvisionMismatch";
    case ErrorCode::AllocationInvalid: return "AllocationInvalid";
    case ErrorCode::ExceedsDeviceLimit: return "ExceedsDeviceLimit";
    case ErrorCode::LogCorrupt: return "LogCorrupt";
    case ErrorCode::NoSnapshot: return "NoSnapshot";
    case ErrorCode::Insufficient: return "Insufficient";
    case ErrorCode::UnknownDevice: return "UnknownDevice";
    case ErrorCode::UnknownCustomer: return "UnknownCustomer";
    case ErrorCode::PolicyBound: return "PolicyBound";
    case ErrorCode::GrantInvalid: return "GrantInvalid";
    case ErrorCode::ScopeUnknown: return "ScopeUnknown";
    case ErrorCode::ChainMismatch: return "ChainMismatch";
    case ErrorCode::ChecksumMismatch: return "ChecksumMismatch";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::UnknownVersion: return "UnknownVersion";
    case ErrorCode::IncompleteStream: return "IncompleteStream";
    case ErrorCode::FrameTooLarge: return "FrameTooLarge";
    case ErrorCode::SignatureInvalid: return "SignatureInvalid";
    case ErrorCode::UnknownTx: return "UnknownTx";
    case ErrorCode::DeviceFrozen: return "DeviceFrozen";
    case ErrorCode::ScenarioInvalid: return "ScenarioInvalid";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::TxVoided: return "TxVoided";
    case ErrorCode::TxCommitted: return "TxCommitted";
    case ErrorCode::Denied: return "Denied";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(detail.empty() ? std::string(to_string(code))
                                        : std::string(to_string(code)) + ": " + detail),
      code_(code) {}

void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace cbdc
