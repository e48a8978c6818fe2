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

#ifndef AMBIG_TOOLS_REPORT_JSON_H_
#define AMBIG_TOOLS_REPORT_JSON_H_

#include "ambig/ambiguity.h"
#include "ambig/automaton.h"
#include "ambig/entropy.h"
#include "ambig/oracle.h"
#include "json.hpp"

namespace ambig::cli {

// Paths are written as [source, label, target] triples so that they can
// be checked without knowing transition ids.
nlohmann::json PathToJson(const FiniteAutomaton &automaton, const Path &path);
nlohmann::json WitnessToJson(const FiniteAutomaton &automaton,
                             const Witness &witness);

// {"class", "dpa", "witness"}; dpa is omitted for exponential ambiguity
// and witness when the report has none.
nlohmann::json AmbiguityToJson(const FiniteAutomaton &automaton,
                               const AmbiguityReport &report);

nlohmann::json EntropyToJson(const EntropyReport &report);

nlohmann::json GrowthToJson(const FiniteAutomaton &automaton,
                            const GrowthTable &table);

}  // namespace ambig::cli

#endif  // AMBIG_TOOLS_REPORT_JSON_H_
