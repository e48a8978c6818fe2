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
// Line-oriented text format for automata.
//
//   # comment
//   initial <id> [<weight>]
//   final <id> [<weight>]
//   trans <src> <dst> <label> [<weight>]
//
// States are non-negative integers declared by mention; the alphabet is
// the set of labels used; <eps> is the epsilon label. A file is either
// fully weighted or fully unweighted. Lines end with LF.

#ifndef AMBIG_TEXT_FORMAT_H_
#define AMBIG_TEXT_FORMAT_H_

#include <string>
#include <string_view>
#include <variant>

#include "ambig/automaton.h"
#include "ambig/intersect.h"
#include "ambig/weighted.h"

namespace ambig {

using AnyAutomaton = std::variant<FiniteAutomaton, ProbAutomaton>;

// Throws ParseError (kParseError or kMixedWeightedness) and the
// validation errors of Validate().
AnyAutomaton ParseAutomaton(std::string_view text);
AnyAutomaton ReadAutomatonFile(const std::string &path);

// Canonical form: initial lines, final lines, then transitions ordered by
// (source, label, target), epsilon first.
std::string SerializeAutomaton(const FiniteAutomaton &automaton);
std::string SerializeAutomaton(const ProbAutomaton &automaton);

// The underlying automaton preceded by comment lines mapping each
// composite state to its projection and filter states.
std::string SerializeProduct(const ProductAutomaton &product);

}  // namespace ambig

#endif  // AMBIG_TEXT_FORMAT_H_
