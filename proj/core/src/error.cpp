// Copyright 2026 The Liouville Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "liouville/error.hpp"

namespace liouville {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument:
      return "InvalidArgument";
    case ErrorKind::kDegenerateConfiguration:
      return "DegenerateConfiguration";
    case ErrorKind::kSharedEndpoint:
      return "SharedEndpoint";
    case ErrorKind::kNotCrossing:
      return "NotCrossing";
    case ErrorKind::kCrossingLeaves:
      return "CrossingLeaves";
    case ErrorKind::kNonpositiveWeight:
      return "NonpositiveWeight";
    case ErrorKind::kValidationFailed:
      return "ValidationFailed";
    case ErrorKind::kBranchGuard:
      return "BranchGuard";
    case ErrorKind::kSlowConvergence:
      return "SlowConvergence";
    case ErrorKind::kStencilFailure:
      return "StencilFailure";
    case ErrorKind::kPathEvaluationFailure:
      return "PathEvaluationFailure";
    case ErrorKind::kAllZero:
      return "AllZero";
  }
  return "Unknown";
}

bool is_numerical(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kBranchGuard:
    case ErrorKind::kSlowConvergence:
    case ErrorKind::kStencilFailure:
    case ErrorKind::kPathEvaluationFailure:
    case ErrorKind::kAllZero:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what),
      kind_(kind) {}

}  // namespace liouville
