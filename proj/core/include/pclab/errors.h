// Copyright 2026 The pclab Authors
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

#ifndef PCLAB_ERRORS_H_
#define PCLAB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace pclab {

enum class ErrorCode {
  kInvalidArgument,
  // Mismatched basis/field, dangling references, malformed proof steps.
  kStructural,
  kParse,
  // Exhaustive procedures refuse instances beyond their enumeration limit.
  kScaleLimit,
  kIo,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pclab

#endif  // PCLAB_ERRORS_H_
