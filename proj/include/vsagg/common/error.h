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

#ifndef VSAGG_COMMON_ERROR_H_
#define VSAGG_COMMON_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace vsagg {

enum class ErrorCode {
  kInvalidArgument,
  kZeroInverse,
  kModulusMismatch,
  kInsufficientShares,
  kDuplicatePoint,
  kCapacityExceeded,
  kThresholdTooLarge,
  kMissingStep1Share,
  kMissingShare,
  kZeroAuthKey,
  kLabelMismatch,
  kEmptyAggregate,
  kNotFound,
  kSetupQuorumFailure,
  kStalenessTimeout,
  kRevealTimeout,
  kVerificationFailed,
  kRecoveryQuorumFailure,
  kAuthFailure,
  kBudgetExhausted,
  kConfigError,
  kDecodeError,
};

std::string_view error_code_name(ErrorCode code);

// All library failures surface as vsagg::Error; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace vsagg

#endif  // VSAGG_COMMON_ERROR_H_
