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

#include "report_json.h"

#include <string>
#include <type_traits>

namespace ambig::cli {
namespace {

using nlohmann::json;

json WordToJson(const FiniteAutomaton &a, const Word &word) {
  json out = json::array();
  for (Label l : word) out.push_back(std::string(a.label_name(l)));
  return out;
}

json IdaToJson(const FiniteAutomaton &a, const IdaWitness &w) {
  return {{"kind", "ida"},
          {"p", w.p},
          {"q", w.q},
          {"label", WordToJson(a, w.label)},
          {"loop_p", PathToJson(a, w.loop_p)},
          {"path_pq", PathToJson(a, w.path_pq)},
          {"loop_q", PathToJson(a, w.loop_q)}};
}

template <typename T>
json OptionalNumber(const std::optional<T> &value) {
  return value ? json(*value) : json(nullptr);
}

}  // namespace

json PathToJson(const FiniteAutomaton &automaton, const Path &path) {
  json out = json::array();
  for (TransitionId t : path) {
    const Transition &tr = automaton.transition(t);
    out.push_back(
        {tr.source, std::string(automaton.label_name(tr.label)), tr.target});
  }
  return out;
}

json WitnessToJson(const FiniteAutomaton &automaton, const Witness &witness) {
  return std::visit(
      [&automaton](const auto &w) -> json {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, EdaWitness>) {
          return {{"kind", "eda"},
                  {"state", w.state},
                  {"label", WordToJson(automaton, w.label)},
                  {"first_cycle", PathToJson(automaton, w.first_cycle)},
                  {"second_cycle", PathToJson(automaton, w.second_cycle)}};
        } else if constexpr (std::is_same_v<T, IdaWitness>) {
          return IdaToJson(automaton, w);
        } else {
          json pairs = json::array();
          for (const auto &[p, q] : w.pairs) pairs.push_back({p, q});
          json certificates = json::array();
          for (const IdaWitness &c : w.certificates) {
            certificates.push_back(IdaToJson(automaton, c));
          }
          return {{"kind", "dpa"},
                  {"pairs", std::move(pairs)},
                  {"certificates", std::move(certificates)}};
        }
      },
      witness);
}

json AmbiguityToJson(const FiniteAutomaton &automaton,
                     const AmbiguityReport &report) {
  json out;
  out["class"] = std::string(AmbiguityClassName(report.ambiguity));
  if (report.ambiguity != AmbiguityClass::kExponential) {
    out["dpa"] = report.degree;
  }
  if (report.witness) {
    out["witness"] = WitnessToJson(automaton, *report.witness);
  }
  return out;
}

json EntropyToJson(const EntropyReport &report) {
  json out;
  out["s"] = report.s;
  out["h_brute"] = OptionalNumber(report.h_brute);
  out["residual_mass"] = OptionalNumber(report.residual_mass);
  out["l"] = report.l;
  out["ambiguity"] = std::string(AmbiguityClassName(report.ambiguity));
  out["dpa"] = report.ambiguity == AmbiguityClass::kExponential
                   ? json(nullptr)
                   : json(report.dpa);
  out["bound_low"] = OptionalNumber(report.bound_low);
  out["bound_high"] = OptionalNumber(report.bound_high);
  out["log_base"] = std::string(LogBaseName(report.base));
  return out;
}

json GrowthToJson(const FiniteAutomaton &automaton, const GrowthTable &table) {
  json rows = json::array();
  for (const GrowthRow &row : table.rows) {
    rows.push_back({{"length", row.length},
                    {"max_da", row.max_count},
                    {"argmax", WordToJson(automaton, row.argmax)}});
  }
  return {{"rows", std::move(rows)}};
}

}  // namespace ambig::cli
