// Copyright 2026 The povm-forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "povm/error.hpp"

namespace povm {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kNotPsd: return "NotPsd";
    case ErrorCode::kNotProjector: return "NotProjector";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kNoSolution: return "NoSolution";
    case ErrorCode::kIncompleteSet: return "IncompleteSet";
    case ErrorCode::kSingularStage: return "SingularStage";
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kValidation: return "Validation";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace povm
