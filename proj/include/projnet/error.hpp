// Copyright 2026 The projnet Authors
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

namespace projnet {

/// Raised when caller-supplied parameters violate an operation's precondition.
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a constructed object fails one of its own structural checks.
class invariant_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw precondition_error(message);
}

inline void ensure(bool condition, const std::string& message) {
  if (!condition) throw invariant_error(message);
}

}  // namespace detail
}  // namespace projnet
