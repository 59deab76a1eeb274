// Copyright 2026 The swabsim Authors.
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

namespace swabsim {

enum class ErrorCode {
  invalid_argument,  // bad value passed to an operation
  parse,             // malformed input file
  validation,        // config value violates a documented constraint
  io,                // file system failure
  controller_fault,  // adaptive controller diverged or produced non-finite output
  scenario_fault,    // simulated world reached an unsafe state
  detection,         // pose pipeline could not produce a result
  fit,               // least-squares problem is rank deficient
  internal,
};

const char* error_code_name(ErrorCode code);

/// Exception carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::parse: return "parse";
    case ErrorCode::validation: return "validation";
    case ErrorCode::io: return "io";
    case ErrorCode::controller_fault: return "controller_fault";
    case ErrorCode::scenario_fault: return "scenario_fault";
    case ErrorCode::detection: return "detection";
    case ErrorCode::fit: return "fit";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

}  // namespace swabsim
