/*
 * Copyright 2026 The vsagg Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "vsagg/common/error.h"

namespace vsagg {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kZeroInverse: return "ZeroInverse";
    case ErrorCode::kModulusMismatch: return "ModulusMismatch";
    case ErrorCode::kInsufficientShares: return "InsufficientShares";
    case ErrorCode::kDuplicatePoint: return "DuplicatePoint";
    case ErrorCode::kCapacityExceeded: return "CapacityExceeded";
    case ErrorCode::kThresholdTooLarge: return "ThresholdTooLarge";
    case ErrorCode::kMissingStep1Share: return "MissingStep1Share";
    case ErrorCode::kMissingShare: return "MissingShare";
    case ErrorCode::kZeroAuthKey: return "ZeroAuthKey";
    case ErrorCode::kLabelMismatch: return "LabelMismatch";
    case ErrorCode::kEmptyAggregate: return "EmptyAggregate";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kSetupQuorumFailure: return "SetupQuorumFailure";
    case ErrorCode::kStalenessTimeout: return "StalenessTimeout";
    case ErrorCode::kRevealTimeout: return "RevealTimeout";
    case ErrorCode::kVerificationFailed: return "VerificationFailed";
    case ErrorCode::kRecoveryQuorumFailure: return "RecoveryQuorumFailure";
    case ErrorCode::kAuthFailure: return "AuthFailure";
    case ErrorCode::kBudgetExhausted: return "BudgetExhausted";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kDecodeError: return "DecodeError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

}  // namespace vsagg
