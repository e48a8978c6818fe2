// Copyright 2026 The Ambig Authors.
//
// Licensed under the Apache License, Version 2.0 (the 'License');
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an 'AS IS' BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Error type shared by every ambig module.

#ifndef AMBIG_ERROR_H_
#define AMBIG_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ambig {

enum class ErrorCode {
  kDuplicateTransition,
  kDanglingStateId,
  kReservedLabelInAlphabet,
  kUnknownSymbol,
  kEpsilonCycleInput,
  kNotTrim,
  kExponentiallyAmbiguousInput,
  kNotEpsilon,
  kEpsilonInput,
  kTransformConflict,
  kSymbolNotInAlphabet,
  kAlphabetTooLarge,
  kCountOverflow,
  kNonPositiveWeight,
  kInvalidWeight,
  kMassNotOne,
  kNonConvergent,
  kParseError,
  kMixedWeightedness,
  kInvalidArgument,
  kInternal,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the text parser; line numbers are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string &reason)
      : Error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ": " + reason),
        line_(line) {}
  ParseError(ErrorCode code, std::size_t line, const std::string &reason)
      : Error(code, "line " + std::to_string(line) + ": " + reason),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Carries the offending total so callers can report it.
class MassNotOneError : public Error {
 public:
  explicit MassNotOneError(double mass)
      : Error(ErrorCode::kMassNotOne,
              "total probability mass " + std::to_string(mass) +
                  " is not 1"),
        mass_(mass) {}

  double mass() const { return mass_; }

 private:
  double mass_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string &message) {
  throw Error(code, message);
}

}  // namespace ambig

#endif  // AMBIG_ERROR_H_
