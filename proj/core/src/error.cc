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

#include "ambig/error.h"

namespace ambig {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateTransition: return "DuplicateTransition";
    case ErrorCode::kDanglingStateId: return "DanglingStateId";
    case ErrorCode::kReservedLabelInAlphabet: return "ReservedLabelInAlphabet";
    case ErrorCode::kUnknownSymbol: return "UnknownSymbol";
    case ErrorCode::kEpsilonCycleInput: return "EpsilonCycleInput";
    case ErrorCode::kNotTrim: return "NotTrim";
    case ErrorCode::kExponentiallyAmbiguousInput:
      return "ExponentiallyAmbiguousInput";
    case ErrorCode::kNotEpsilon: return "NotEpsilon";
    case ErrorCode::kEpsilonInput: return "EpsilonInput";
    case ErrorCode::kTransformConflict: return "TransformConflict";
    case ErrorCode::kSymbolNotInAlphabet: return "SymbolNotInAlphabet";
    case ErrorCode::kAlphabetTooLarge: return "AlphabetTooLarge";
    case ErrorCode::kCountOverflow: return "CountOverflow";
    case ErrorCode::kNonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::kInvalidWeight: return "InvalidWeight";
    case ErrorCode::kMassNotOne: return "MassNotOne";
    case ErrorCode::kNonConvergent: return "NonConvergent";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kMixedWeightedness: return "MixedWeightedness";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace ambig
