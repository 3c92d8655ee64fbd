// Copyright 2026 The ksym Authors
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

#include "ksym/error.hpp"

namespace ksym {

const char* ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kNotSquare: return "not square";
    case ErrorCode::kDimensionMismatch: return "dimension mismatch";
    case ErrorCode::kSingular: return "singular";
    case ErrorCode::kInexactDivision: return "inexact division";
    case ErrorCode::kUnsolvable: return "unsolvable";
    case ErrorCode::kFormulaVerification: return "formula verification failed";
    case ErrorCode::kNotAutomorphism: return "not an automorphism";
    case ErrorCode::kNotFree: return "action not free";
    case ErrorCode::kOrderMismatch: return "order mismatch";
    case ErrorCode::kInvalidBase: return "invalid base";
    case ErrorCode::kNotPartition: return "not a partition";
    case ErrorCode::kNotEquitable: return "not equitable";
    case ErrorCode::kDisconnected: return "disconnected";
    case ErrorCode::kNonIntegral: return "non-integral";
    case ErrorCode::kParse: return "parse error";
  }
  return "unknown";
}

}  // namespace ksym
