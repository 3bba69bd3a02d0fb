// Copyright 2026 The RDIE Authors. All Rights Reserved.
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

#ifndef RDIE_ERROR_H_
#define RDIE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace rdie {

enum class ErrorKind {
  kInvalidArgument,  // violated precondition on a parameter
  kDimension,        // two images (or channels) disagree in size
  kSize,             // image smaller than the window it is scanned with
  kBounds,           // region outside the image
  kDomain,           // numeric argument outside the function's domain
  kParse,            // malformed text input
  kIo,               // unreadable / undecodable file
  kUndefinedCorrelation,
  kCorrectness,      // fast and naive engines disagree
};

constexpr std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "invalid argument";
    case ErrorKind::kDimension: return "dimension error";
    case ErrorKind::kSize: return "size error";
    case ErrorKind::kBounds: return "bounds error";
    case ErrorKind::kDomain: return "domain error";
    case ErrorKind::kParse: return "parse error";
    case ErrorKind::kIo: return "i/o error";
    case ErrorKind::kUndefinedCorrelation: return "undefined correlation";
    case ErrorKind::kCorrectness: return "correctness error";
  }
  return "error";
}

// All library failures are reported as rdie::Error; callers that need to
// branch (the CLI's exit codes, the harness's per-row failures) use kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace rdie

#endif  // RDIE_ERROR_H_
