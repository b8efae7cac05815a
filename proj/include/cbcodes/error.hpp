// Copyright 2026 The cbcodes Authors
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
#include <string_view>

namespace cbcodes {

enum class ErrorKind {
  NotPrime,
  ReducibleModulus,
  FieldTooLarge,
  DivisionByZero,
  FieldMismatch,
  SyntaxError,
  UnknownVariable,
  SpaceTooLarge,
  NonHomogeneous,
  WrongCount,
  NotSplit,
  NoNormalizerFound,
  NormalizerVanishes,
  CapExceeded,
  NotASubset,
  DegreeOutOfRange,
  UnknownKind,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (notably the CLI) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cbcodes
