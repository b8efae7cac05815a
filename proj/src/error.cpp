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

#include "cbcodes/error.hpp"

namespace cbcodes {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::SpaceTooLarge: return "SpaceTooLarge";
    case ErrorKind::NonHomogeneous: return "NonHomogeneous";
    case ErrorKind::WrongCount: return "WrongCount";
    case ErrorKind::NotSplit: return "NotSplit";
    case ErrorKind::NoNormalizerFound: return "NoNormalizerFound";
    case ErrorKind::NormalizerVanishes: return "NormalizerVanishes";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotASubset: return "NotASubset";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::UnknownKind: return "UnknownKind";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace cbcodes
