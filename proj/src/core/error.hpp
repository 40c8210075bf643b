// Copyright 2026 The qsc developers
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

namespace qsc {

// Error taxonomy. Values line up with qsc_status in the public C header so the
// bridge is a cast plus the message.
enum class ErrorCode {
  dimension = 1,     // shape mismatch between operands
  domain = 2,        // argument value outside the operation's domain
  precondition = 3,  // stated operation requirement violated
  parse = 4,         // malformed file content or literal
  io = 5,            // filesystem failure
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

inline void require(bool ok, ErrorCode code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

}  // namespace qsc
