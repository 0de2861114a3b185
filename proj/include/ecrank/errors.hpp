// Copyright 2026 The ecrank Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace ecrank {

/// Raised when an input violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numeric routine cannot reach its stated error bound at the
/// configured precision. Never swallowed: callers either retry at a higher
/// precision or surface it.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical verification step failed (identity, divisor shape, ...).
class VerificationError : public std::runtime_error {
 public:
  VerificationError(std::string layer, const std::string& detail)
      : std::runtime_error(layer + ": " + detail), layer_(std::move(layer)) {}

  const std::string& layer() const noexcept { return layer_; }

 private:
  std::string layer_;
};

}  // namespace ecrank
