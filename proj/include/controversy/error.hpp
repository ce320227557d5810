// Copyright 2026 The controversy-lab Authors.
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

#ifndef CONTROVERSY_ERROR_HPP_
#define CONTROVERSY_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace controversy {

enum class ErrorCode {
  kInvalidArgument,  // caller or configuration mistake
  kParse,            // malformed input text
  kIo,               // file could not be read or written
  kData,             // input is well-formed but unusable (e.g. one-sided split)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline Error InvalidArgument(const std::string& what) {
  return Error(ErrorCode::kInvalidArgument, what);
}
inline Error ParseError(const std::string& what) {
  return Error(ErrorCode::kParse, what);
}
inline Error IoError(const std::string& what) {
  return Error(ErrorCode::kIo, what);
}
inline Error DataError(const std::string& what) {
  return Error(ErrorCode::kData, what);
}

}  // namespace controversy

#endif  // CONTROVERSY_ERROR_HPP_
