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

#include "cli.h"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <string>
#include <type_traits>
#include <variant>

#include "CLI11.hpp"
#include "ambig/ambiguity.h"
#include "ambig/automaton.h"
#include "ambig/entropy.h"
#include "ambig/intersect.h"
#include "ambig/oracle.h"
#include "ambig/text_format.h"
#include "report_json.h"

namespace ambig::cli {
namespace {

const FiniteAutomaton &Skeleton(const AnyAutomaton &any) {
  if (const auto *w = std::get_if<ProbAutomaton>(&any)) return w->skeleton();
  return std::get<FiniteAutomaton>(any);
}

FiniteAutomaton ReadSkeleton(const std::string &path) {
  return Skeleton(ReadAutomatonFile(path));
}

ProbAutomaton ReadWeighted(const std::string &path) {
  AnyAutomaton any = ReadAutomatonFile(path);
  auto *w = std::get_if<ProbAutomaton>(&any);
  if (w == nullptr) {
    Fail(ErrorCode::kInvalidArgument, path + " carries no weights");
  }
  return std::move(*w);
}

void Emit(const std::string &text, const std::string &path,
          std::ostream &out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) Fail(ErrorCode::kInvalidArgument, "cannot write " + path);
  file << text;
  if (!file) Fail(ErrorCode::kInvalidArgument, "cannot write " + path);
}

std::string Fixed(double value) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << value;
  return s.str();
}

std::string PathText(const FiniteAutomaton &a, const Path &path) {
  if (path.empty()) return "(empty)";
  std::string text = std::to_string(a.transition(path.front()).source);
  for (TransitionId t : path) {
    const Transition &tr = a.transition(t);
    text += " -";
    text += a.label_name(tr.label);
    text += "-> " + std::to_string(tr.target);
  }
  return text;
}

void PrintIda(const FiniteAutomaton &a, const IdaWitness &w,
              std::ostream &out) {
  out << "ida p=" << w.p << " q=" << w.q << " label="
      << WordToString(a, w.label) << '\n'
      << "  loop at p: " << PathText(a, w.loop_p) << '\n'
      << "  path p->q: " << PathText(a, w.path_pq) << '\n'
      << "  loop at q: " << PathText(a, w.loop_q) << '\n';
}

void PrintWitness(const FiniteAutomaton &a, const Witness &witness,
                  std::ostream &out) {
  std::visit(
      [&](const auto &w) {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, EdaWitness>) {
          out << "eda state=" << w.state
              << " label=" << WordToString(a, w.label) << '\n'
              << "  first cycle:  " << PathText(a, w.first_cycle) << '\n'
              << "  second cycle: " << PathText(a, w.second_cycle) << '\n';
        } else if constexpr (std::is_same_v<T, IdaWitness>) {
          PrintIda(a, w, out);
        } else {
          out << "chain of " << w.pairs.size() << " ida pairs\n";
          for (const IdaWitness &c : w.certificates) PrintIda(a, c, out);
        }
      },
      witness);
}

struct Options {
  std::string file;
  std::string second_file;
  std::string output;
  std::string text;
  bool json = false;
  bool witness = false;
  bool report = false;
  int power = 2;
  std::string method = "semiring";
  std::string base = "e";
  double tol = 1e-10;
  std::size_t max_len = 20;
  std::size_t table_len = 8;
  RandomAutomatonParams gen;
};

int Dispatch(CLI::App &app, const Options &o, std::ostream &out) {
  const auto chosen = [&app](const char *name) {
    return app.got_subcommand(name);
  };

  if (chosen("classify")) {
    const FiniteAutomaton a = ReadSkeleton(o.file);
    ClassifyOptions options;
    options.witness = o.witness || o.json;
    AmbiguityReport report = Classify(a, options);
    if (o.json) {
      if (!o.witness) report.witness.reset();
      out << AmbiguityToJson(a, report).dump() << '\n';
    } else {
      out << ToLine(report) << '\n';
      if (o.witness && report.witness) PrintWitness(a, *report.witness, out);
    }
    return kExitOk;
  }
  if (chosen("dpa")) {
    const AmbiguityReport report = Classify(ReadSkeleton(o.file));
    if (report.ambiguity == AmbiguityClass::kExponential) {
      out << "inf\n";
    } else {
      out << report.degree << '\n';
    }
    return kExitOk;
  }
  if (chosen("intersect")) {
    const ProductAutomaton p =
        Intersect(ReadSkeleton(o.file), ReadSkeleton(o.second_file));
    Emit(SerializeProduct(p), o.output, out);
    return kExitOk;
  }
  if (chosen("power")) {
    const FiniteAutomaton a = ReadSkeleton(o.file);
    Emit(SerializeProduct(o.power == 2 ? Square(a) : Cube(a)), o.output, out);
    return kExitOk;
  }
  if (chosen("trim")) {
    const AnyAutomaton any = ReadAutomatonFile(o.file);
    if (const auto *w = std::get_if<ProbAutomaton>(&any)) {
      Emit(SerializeAutomaton(TrimWeighted(*w)), o.output, out);
    } else {
      Emit(SerializeAutomaton(Trim(std::get<FiniteAutomaton>(any))), o.output,
           out);
    }
    return kExitOk;
  }
  if (chosen("info")) {
    const AnyAutomaton any = ReadAutomatonFile(o.file);
    const FiniteAutomaton &a = Skeleton(any);
    const auto yes_no = [](bool b) { return b ? "yes" : "no"; };
    out << "states " << a.num_states() << '\n'
        << "transitions " << a.num_transitions() << '\n'
        << "epsilon_transitions " << a.num_epsilon_transitions() << '\n'
        << "alphabet";
    for (const std::string &s : a.alphabet()) out << ' ' << s;
    out << '\n'
        << "initial_states " << a.initial().size() << '\n'
        << "final_states " << a.final_states().size() << '\n'
        << "weighted " << yes_no(std::holds_alternative<ProbAutomaton>(any))
        << '\n'
        << "trim " << yes_no(IsTrim(a)) << '\n'
        << "epsilon_cycle " << yes_no(HasEpsilonCycle(a)) << '\n';
    return kExitOk;
  }

  ShortestDistanceOptions sd;
  sd.tolerance = o.tol;
  const double mass_tolerance = std::max(1e-9, 10.0 * o.tol);

  if (chosen("entropy")) {
    const ProbabilisticAutomaton pa =
        ValidateProbabilistic(ReadWeighted(o.file), mass_tolerance, sd);
    const LogBase base = o.base == "2" ? LogBase::k2 : LogBase::kE;
    const bool brute = o.method == "brute";
    if (o.report) {
      EntropyReportOptions options;
      options.shortest_distance = sd;
      options.brute = brute;
      options.brute_max_length = o.max_len;
      options.base = base;
      out << EntropyToJson(ComputeEntropyReport(pa, options)).dump() << '\n';
      return kExitOk;
    }
    double nats = 0.0;
    if (brute) {
      nats = ComputeBruteEntropy(pa, o.max_len).entropy;
    } else {
      nats = EntropySemiringEstimate(pa, sd);
    }
    out << Fixed(base == LogBase::k2 ? nats / std::numbers::ln2 : nats)
        << '\n';
    return kExitOk;
  }
  if (chosen("expected-length")) {
    const ProbabilisticAutomaton pa =
        ValidateProbabilistic(ReadWeighted(o.file), mass_tolerance, sd);
    out << Fixed(ExpectedLength(pa, sd)) << '\n';
    return kExitOk;
  }

  if (CLI::App *oracle = app.get_subcommand("oracle"); oracle->parsed()) {
    const FiniteAutomaton a = ReadSkeleton(o.file);
    if (oracle->got_subcommand("da")) {
      out << CountPaths(a, ToWord(a, SplitSymbols(a, o.text))) << '\n';
      return kExitOk;
    }
    const GrowthTable table = ComputeGrowthTable(a, o.table_len);
    if (o.json) {
      out << GrowthToJson(a, table).dump() << '\n';
      return kExitOk;
    }
    out << std::setw(6) << "length" << ' ' << std::setw(20) << "max_da"
        << "  argmax\n";
    for (const GrowthRow &row : table.rows) {
      out << std::setw(6) << row.length << ' ' << std::setw(20)
          << row.max_count << "  "
          << (row.argmax.empty() ? std::string("<eps>")
                                 : WordToString(a, row.argmax))
          << '\n';
    }
    return kExitOk;
  }
  if (chosen("gen")) {
    Emit(SerializeAutomaton(RandomAutomaton(o.gen)), o.output, out);
    return kExitOk;
  }
  Fail(ErrorCode::kInternal, "no command selected");
}

}  // namespace

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEpsilonCycleInput:
      return kExitEpsilonCycle;
    case ErrorCode::kMassNotOne:
    case ErrorCode::kNonConvergent:
    case ErrorCode::kNonPositiveWeight:
    case ErrorCode::kInvalidWeight:
      return kExitProbabilistic;
    case ErrorCode::kInternal:
      return kExitInternal;
    default:
      return kExitUsage;
  }
}

int Run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Ambiguity and entropy of finite automata", "ambig"};
  app.require_subcommand(1);
  Options o;

  CLI::App *classify =
      app.add_subcommand("classify", "Print the ambiguity class");
  classify->add_option("FILE", o.file)->required();
  classify->add_flag("--json", o.json, "Single-line JSON output");
  classify->add_flag("--witness", o.witness, "Include a witness");

  CLI::App *dpa = app.add_subcommand(
      "dpa", "Print the degree of polynomial ambiguity (inf if exponential)");
  dpa->add_option("FILE", o.file)->required();

  CLI::App *intersect =
      app.add_subcommand("intersect", "Intersect two automata");
  intersect->add_option("A", o.file)->required();
  intersect->add_option("B", o.second_file)->required();
  intersect->add_option("-o,--output", o.output, "Output file");

  CLI::App *power = app.add_subcommand("power", "Square or cube");
  power->add_option("FILE", o.file)->required();
  power->add_option("-n", o.power, "2 or 3")
      ->check(CLI::IsMember({2, 3}));
  power->add_option("-o,--output", o.output, "Output file");

  CLI::App *trim = app.add_subcommand("trim", "Remove useless states");
  trim->add_option("FILE", o.file)->required();
  trim->add_option("-o,--output", o.output, "Output file");

  CLI::App *info = app.add_subcommand("info", "Summarize an automaton");
  info->add_option("FILE", o.file)->required();

  CLI::App *entropy = app.add_subcommand(
      "entropy", "Entropy of a probabilistic automaton");
  entropy->add_option("FILE", o.file)->required();
  entropy->add_option("--method", o.method, "semiring or brute")
      ->check(CLI::IsMember({"semiring", "brute"}));
  entropy->add_option("--tol", o.tol, "Relaxation tolerance")
      ->check(CLI::PositiveNumber);
  entropy->add_option("--max-len", o.max_len,
                      "Length limit of brute-force enumeration");
  entropy->add_option("--base", o.base, "Logarithm base, e or 2")
      ->check(CLI::IsMember({"e", "2"}));
  entropy->add_flag("--report", o.report, "JSON report with bounds");

  CLI::App *length =
      app.add_subcommand("expected-length", "Expected string length");
  length->add_option("FILE", o.file)->required();
  length->add_option("--tol", o.tol, "Relaxation tolerance")
      ->check(CLI::PositiveNumber);

  CLI::App *oracle = app.add_subcommand("oracle", "Brute-force path counts");
  oracle->require_subcommand(1);
  CLI::App *da = oracle->add_subcommand("da", "Count paths labelled STRING");
  da->add_option("FILE", o.file)->required();
  da->add_option("STRING", o.text)->required();
  CLI::App *table =
      oracle->add_subcommand("table", "Largest path count per length");
  table->add_option("FILE", o.file)->required();
  table->add_option("--max-len", o.table_len)->required();
  table->add_flag("--json", o.json, "Single-line JSON output");

  CLI::App *gen = app.add_subcommand("gen", "Random trim automaton");
  gen->add_option("--states", o.gen.states)->required();
  gen->add_option("--symbols", o.gen.symbols)->required();
  gen->add_option("--density", o.gen.density)->required();
  gen->add_option("--eps-density", o.gen.eps_density)->default_val(0.0);
  gen->add_option("--seed", o.gen.seed)->required();
  gen->add_option("-o,--output", o.output, "Output file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return Dispatch(app, o, out);
  } catch (const Error &e) {
    err << "ambig: " << ErrorCodeName(e.code()) << ": " << e.what() << '\n';
    return ExitCodeFor(e.code());
  } catch (const std::exception &e) {
    err << "ambig: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace ambig::cli
