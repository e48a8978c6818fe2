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

#include "ambig/text_format.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "ambig/error.h"

namespace ambig {
namespace {

std::vector<std::string_view> Tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

StateId ParseState(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto [end, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size() ||
      value >= kNoState) {
    throw ParseError(line, "invalid state id '" + std::string(token) + "'");
  }
  return static_cast<StateId>(value);
}

double ParseWeight(std::string_view token, std::size_t line) {
  double value = 0.0;
  const auto [end, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size() ||
      !std::isfinite(value)) {
    throw ParseError(line, "invalid weight '" + std::string(token) + "'");
  }
  return value;
}

std::string FormatWeight(double w) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, w);
  return std::string(buffer, end);
}

struct Parsed {
  AutomatonDescription description;
  std::optional<bool> weighted;
  std::vector<double> transition_weights;
  std::map<StateId, double> initial_weights;
  std::map<StateId, double> final_weights;
};

std::vector<TransitionId> CanonicalOrder(const FiniteAutomaton &a) {
  std::vector<TransitionId> order(a.num_transitions());
  for (TransitionId t = 0; t < order.size(); ++t) order[t] = t;
  std::sort(order.begin(), order.end(), [&a](TransitionId x, TransitionId y) {
    return a.transition(x) < a.transition(y);
  });
  return order;
}

void WriteTransition(std::ostringstream &out, const FiniteAutomaton &a,
                     const Transition &t) {
  out << "trans " << t.source << ' ' << t.target << ' '
      << a.label_name(t.label);
}

}  // namespace

AnyAutomaton ParseAutomaton(std::string_view text) {
  Parsed parsed;
  std::set<StateId> seen_initial;
  std::set<StateId> seen_final;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (line.find('\r') != std::string_view::npos) {
      throw ParseError(line_no, "carriage return in line (LF endings only)");
    }
    const auto tokens = Tokenize(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;

    const std::string_view directive = tokens[0];
    std::size_t arity = 0;
    if (directive == "initial" || directive == "final") {
      arity = 2;
    } else if (directive == "trans") {
      arity = 4;
    } else {
      throw ParseError(line_no,
                       "unknown directive '" + std::string(directive) + "'");
    }
    if (tokens.size() != arity && tokens.size() != arity + 1) {
      throw ParseError(line_no, "'" + std::string(directive) + "' expects " +
                                    std::to_string(arity - 1) +
                                    " fields and an optional weight");
    }
    const bool weighted = tokens.size() == arity + 1;
    if (!parsed.weighted) {
      parsed.weighted = weighted;
    } else if (*parsed.weighted != weighted) {
      throw ParseError(ErrorCode::kMixedWeightedness, line_no,
                       "weighted and unweighted lines are mixed");
    }
    const double weight = weighted ? ParseWeight(tokens[arity], line_no) : 1.0;

    if (directive == "trans") {
      const StateId src = ParseState(tokens[1], line_no);
      const StateId dst = ParseState(tokens[2], line_no);
      parsed.description.transitions.push_back(
          {src, std::string(tokens[3]), dst});
      parsed.transition_weights.push_back(weight);
      continue;
    }
    const StateId q = ParseState(tokens[1], line_no);
    if (directive == "initial") {
      if (!seen_initial.insert(q).second) {
        throw ParseError(line_no, "state " + std::to_string(q) +
                                      " is declared initial twice");
      }
      parsed.description.initial.push_back(q);
      parsed.initial_weights[q] = weight;
    } else {
      if (!seen_final.insert(q).second) {
        throw ParseError(line_no, "state " + std::to_string(q) +
                                      " is declared final twice");
      }
      parsed.description.final_states.push_back(q);
      parsed.final_weights[q] = weight;
    }
  }

  FiniteAutomaton skeleton = Validate(parsed.description);
  if (!parsed.weighted.value_or(false)) return skeleton;
  std::vector<double> initial;
  for (StateId q : skeleton.initial()) {
    initial.push_back(parsed.initial_weights.at(q));
  }
  std::vector<double> final_weights;
  for (StateId q : skeleton.final_states()) {
    final_weights.push_back(parsed.final_weights.at(q));
  }
  return ProbAutomaton(std::move(skeleton),
                       std::move(parsed.transition_weights),
                       std::move(initial), std::move(final_weights));
}

AnyAutomaton ReadAutomatonFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kInvalidArgument, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseAutomaton(buffer.str());
}

std::string SerializeAutomaton(const FiniteAutomaton &automaton) {
  std::ostringstream out;
  for (StateId q : automaton.initial()) out << "initial " << q << '\n';
  for (StateId q : automaton.final_states()) out << "final " << q << '\n';
  for (TransitionId t : CanonicalOrder(automaton)) {
    WriteTransition(out, automaton, automaton.transition(t));
    out << '\n';
  }
  return out.str();
}

std::string SerializeAutomaton(const ProbAutomaton &automaton) {
  const FiniteAutomaton &a = automaton.skeleton();
  std::ostringstream out;
  for (std::size_t i = 0; i < a.initial().size(); ++i) {
    out << "initial " << a.initial()[i] << ' '
        << FormatWeight(automaton.initial_weights()[i]) << '\n';
  }
  for (std::size_t i = 0; i < a.final_states().size(); ++i) {
    out << "final " << a.final_states()[i] << ' '
        << FormatWeight(automaton.final_weights()[i]) << '\n';
  }
  for (TransitionId t : CanonicalOrder(a)) {
    WriteTransition(out, a, a.transition(t));
    out << ' ' << FormatWeight(automaton.weight(t)) << '\n';
  }
  return out.str();
}

std::string SerializeProduct(const ProductAutomaton &product) {
  const FiniteAutomaton &a = product.underlying();
  std::ostringstream out;
  out << "# product of " << product.arity() << " automata, "
      << a.num_states() << " states\n";
  for (StateId s = 0; s < a.num_states(); ++s) {
    out << "# state " << s << " = (";
    for (std::size_t i = 0; i < product.arity(); ++i) {
      if (i > 0) out << ',';
      out << product.component(s, i);
    }
    out << ") filter ";
    for (std::size_t i = 0; i + 1 < product.arity(); ++i) {
      if (i > 0) out << ',';
      out << 'F' << static_cast<int>(product.filter(s, i));
    }
    out << '\n';
  }
  out << SerializeAutomaton(a);
  return out.str();
}

}  // namespace ambig
