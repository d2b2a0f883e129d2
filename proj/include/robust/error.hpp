// Copyright 2026 The Authors.
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

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace robust {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied value breaks a documented precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An exhaustive routine was asked to run beyond its size guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// A proven statement failed to hold during replay. Always an
/// implementation bug, never a property of the input.
class LemmaViolation : public Error {
 public:
  using Error::Error;
};

/// A witness object is malformed (as opposed to failing (R1)-(R3)).
class MalformedWitness : public Error {
 public:
  using Error::Error;
};

/// True when ROBUST_GUARD_OVERRIDE=1 is set in the environment.
inline bool guards_overridden() {
  const char* value = std::getenv("ROBUST_GUARD_OVERRIDE");
  return value != nullptr && std::strcmp(value, "1") == 0;
}

/// Throws GuardExceeded when `value > limit`, unless guards are overridden.
inline void enforce_guard(std::size_t value, std::size_t limit,
                          const std::string& what) {
  if (value > limit && !guards_overridden()) {
    throw GuardExceeded(what + " = " + std::to_string(value) +
                        " exceeds guard " + std::to_string(limit));
  }
}

}  // namespace robust
