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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace liouville {

enum class ErrorKind {
  kInvalidArgument,
  kDegenerateConfiguration,
  kSharedEndpoint,
  kNotCrossing,
  kCrossingLeaves,
  kNonpositiveWeight,
  kValidationFailed,
  kBranchGuard,
  kSlowConvergence,
  kStencilFailure,
  kPathEvaluationFailure,
  kAllZero,
};

std::string_view to_string(ErrorKind kind);

// True for failures of the numerical machinery, as opposed to bad input.
bool is_numerical(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace liouville
