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

// Acceptance runner. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ambig/ambiguity.h"
#include "ambig/entropy.h"
#include "ambig/error.h"
#include "ambig/fixtures.h"
#include "ambig/intersect.h"
#include "ambig/oracle.h"
#include "ambig/scc.h"
#include "test_util.h"

namespace ambig {
namespace {

using Clock = std::chrono::steady_clock;
constexpr double kLn2 = std::numbers::ln2;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

// Collects failures for one criterion; keeps the first few messages.
class Tally {
 public:
  void Check(bool ok, const std::string &what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (notes_.size() < 5) notes_.push_back(what);
  }
  bool ok() const { return failures_ == 0 && checks_ > 0; }
  std::size_t checks() const { return checks_; }
  std::size_t failures() const { return failures_; }
  std::string Notes() const {
    std::string out;
    for (const std::string &n : notes_) out += "\n    " + n;
    return out;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> notes_;
};

struct Outcome {
  bool ok;
  std::string summary;
};

std::string Str(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::pair<AmbiguityClass, std::size_t> ClassOf(const FiniteAutomaton &a) {
  const AmbiguityReport r = Classify(a);
  return {r.ambiguity, r.degree};
}

std::string Describe(std::pair<AmbiguityClass, std::size_t> c) {
  AmbiguityReport r;
  r.ambiguity = c.first;
  r.degree = c.second;
  return ToLine(r);
}

Outcome FixtureClassifications() {
  const std::vector<std::pair<std::string, FiniteAutomaton>> cases{
      {"FINITE", fixtures::Fin2()},
      {"POLYNOMIAL degree=1", fixtures::Poly1()},
      {"POLYNOMIAL degree=2", fixtures::Poly2()},
      {"EXPONENTIAL", fixtures::Exp()},
      {"POLYNOMIAL degree=1", fixtures::Eps()}};
  Tally t;
  double slowest = 0.0;
  for (const auto &[want, a] : cases) {
    const auto start = Clock::now();
    const std::string got = ToLine(Classify(a));
    const double secs = Seconds(start);
    slowest = std::max(slowest, secs);
    t.Check(got == want, "expected " + want + ", got " + got);
    t.Check(secs < 1.0, want + " took " + Str(secs) + " s");
  }
  return {t.ok(), "5 fixtures, slowest " + Str(slowest) + " s" + t.Notes()};
}

Outcome PathCountProduct() {
  Tally t;
  const auto strings = testing::AllStrings({"a", "b"}, 6);
  for (std::uint64_t i = 0; i < 200; ++i) {
    const FiniteAutomaton a = testing::RandomSmall(10000 + 2 * i, 6, 2, 0.2);
    const FiniteAutomaton b = testing::RandomSmall(10001 + 2 * i, 6, 2, 0.2);
    const FiniteAutomaton p = Intersect(a, b).underlying();
    for (const auto &x : strings) {
      const PathCount want =
          testing::CountTokens(a, x) * testing::CountTokens(b, x);
      const PathCount got = testing::CountTokens(p, x);
      if (got != want) {
        t.Check(false, "pair " + std::to_string(i) + ": " +
                           std::to_string(got) + " != " +
                           std::to_string(want));
      } else {
        t.Check(true, "");
      }
    }
  }
  return {t.ok(), "200 pairs, " + std::to_string(t.checks()) +
                      " string checks, " + std::to_string(t.failures()) +
                      " failures" + t.Notes()};
}

Outcome FilterUniqueness() {
  std::map<std::pair<int, int>, int> per_offset;
  for (const std::string &s : testing::AllMoveSequences("abc", 6)) {
    if (!testing::FilterAccepts(s)) continue;
    int left = 0;
    int right = 0;
    for (char m : s) {
      if (m != 'a') ++left;
      if (m != 'b') ++right;
    }
    ++per_offset[{left, right}];
  }
  Tally t;
  for (int i = 0; i <= 3; ++i) {
    for (int j = 0; j <= 3; ++j) {
      t.Check(per_offset.count({i, j}) == 1,
              "displacement " + std::to_string(i) + "," +
                  std::to_string(j) + " unreachable");
    }
  }
  std::size_t duplicates = 0;
  for (const auto &[offset, n] : per_offset) {
    t.Check(n == 1, "displacement " + std::to_string(offset.first) + "," +
                        std::to_string(offset.second) + " has " +
                        std::to_string(n) + " sequences");
    if (n > 1) ++duplicates;
  }
  return {t.ok(), std::to_string(per_offset.size()) +
                      " displacements reached, " + std::to_string(duplicates) +
                      " with duplicates" + t.Notes()};
}

Outcome Metamorphic(const std::vector<FiniteAutomaton> &corpus) {
  Tally t;
  std::size_t conflicts = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const FiniteAutomaton &a = corpus[i];
    const auto base = ClassOf(a);
    const auto check = [&](const FiniteAutomaton &b, const std::string &how) {
      const auto got = ClassOf(b);
      t.Check(got == base, "automaton " + std::to_string(i) + " " + how +
                               ": " + Describe(base) + " -> " +
                               Describe(got));
    };
    std::vector<StateId> perm(a.num_states());
    for (StateId s = 0; s < perm.size(); ++s) perm[s] = s;
    Uniform u(i);
    for (std::size_t s = perm.size(); s > 1; --s) {
      std::swap(perm[s - 1], perm[u.Below(s)]);
    }
    check(RenameStates(a, perm), "renamed");
    check(Reverse(a), "reversed");
    for (TransitionId e = 0; e < a.num_transitions(); ++e) {
      if (a.transition(e).is_epsilon()) {
        try {
          check(EliminateEpsilonTransition(a, e),
                "eps-removal of " + std::to_string(e));
        } catch (const Error &err) {
          if (err.code() != ErrorCode::kTransformConflict) throw;
          ++conflicts;
        }
      } else {
        check(SplitTransition(a, e), "split of " + std::to_string(e));
      }
    }
  }
  return {t.ok(), std::to_string(corpus.size()) + " automata, " +
                      std::to_string(t.checks()) + " transformed variants, " +
                      std::to_string(t.failures()) + " changed; " +
                      std::to_string(conflicts) +
                      " eps-removals skipped (would merge transitions)" +
                      t.Notes()};
}

Outcome Witnesses(const std::vector<FiniteAutomaton> &corpus) {
  std::vector<FiniteAutomaton> all{fixtures::Fin2(), fixtures::Poly1(),
                                   fixtures::Poly2(), fixtures::Exp(),
                                   fixtures::Eps()};
  all.insert(all.end(), corpus.begin(), corpus.end());
  Tally t;
  std::size_t emitted = 0;
  ClassifyOptions options;
  options.witness = true;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const AmbiguityReport r = Classify(all[i], options);
    if (r.ambiguity == AmbiguityClass::kFinite) {
      t.Check(!r.witness.has_value(), "finite input has a witness");
      continue;
    }
    t.Check(r.witness.has_value(), "missing witness " + std::to_string(i));
    if (!r.witness) continue;
    ++emitted;
    std::string reason;
    t.Check(testing::CheckWitness(all[i], *r.witness),
            "direct check failed on input " + std::to_string(i));
    t.Check(ValidateWitness(all[i], *r.witness, &reason),
            "validator rejected input " + std::to_string(i) + ": " + reason);
  }
  return {t.ok(), std::to_string(emitted) + " witnesses checked, " +
                      std::to_string(t.failures()) + " invalid" + t.Notes()};
}

Outcome Growth(const std::vector<FiniteAutomaton> &corpus) {
  Tally t;
  std::map<AmbiguityClass, int> seen;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const FiniteAutomaton &a = corpus[i];
    const AmbiguityReport r = Classify(a);
    ++seen[r.ambiguity];
    const GrowthTable g = ComputeGrowthTable(a, 12);
    const std::string id = "automaton " + std::to_string(i) + " ";
    switch (r.ambiguity) {
      case AmbiguityClass::kFinite:
        for (std::size_t n = 9; n <= 12; ++n) {
          t.Check(g.MaxUpTo(n) == g.MaxUpTo(8),
                  id + "finite but max grows at n=" + std::to_string(n));
        }
        break;
      case AmbiguityClass::kExponential:
        t.Check(g.rows[10].max_count >= 2 * g.MaxUpTo(5),
                id + "exponential: " + std::to_string(g.rows[10].max_count) +
                    " at n=10 vs " + std::to_string(g.MaxUpTo(5)) +
                    " up to n=5");
        break;
      case AmbiguityClass::kPolynomial:
        t.Check(static_cast<double>(g.rows[12].max_count) <=
                    std::pow(13.0, static_cast<double>(r.degree)) *
                        static_cast<double>(g.MaxUpTo(4)),
                id + "degree " + std::to_string(r.degree) + ": " +
                    std::to_string(g.rows[12].max_count) + " at n=12 vs " +
                    std::to_string(g.MaxUpTo(4)) + " up to n=4");
        break;
    }
  }
  return {t.ok(),
          std::to_string(seen[AmbiguityClass::kFinite]) + " finite, " +
              std::to_string(seen[AmbiguityClass::kPolynomial]) +
              " polynomial, " +
              std::to_string(seen[AmbiguityClass::kExponential]) +
              " exponential; " + std::to_string(t.failures()) +
              " violations" + t.Notes()};
}

Outcome EntropyValues() {
  Tally t;
  ShortestDistanceOptions sd;
  sd.tolerance = 1e-10;
  const ProbabilisticAutomaton unif =
      ValidateProbabilistic(fixtures::Unif(), 1e-9, sd);
  const ProbabilisticAutomaton geo =
      ValidateProbabilistic(fixtures::Geo(), 1e-9, sd);
  const double s_unif = EntropySemiringEstimate(unif, sd);
  const double s_geo = EntropySemiringEstimate(geo, sd);
  const double l_geo = ExpectedLength(geo, sd);
  const BruteEntropy brute = ComputeBruteEntropy(geo, 40);
  t.Check(std::abs(s_unif - kLn2) <= 1e-9, "unif S = " + Str(s_unif));
  t.Check(std::abs(s_geo - 1.386294) <= 1e-6, "geo S = " + Str(s_geo));
  t.Check(std::abs(l_geo - 1.0) <= 1e-6, "geo L = " + Str(l_geo));
  t.Check(std::abs(brute.entropy - s_geo) <= 1e-6,
          "geo H_brute = " + Str(brute.entropy));
  t.Check(brute.residual_mass < 1e-11,
          "geo residual = " + Str(brute.residual_mass));
  return {t.ok(), "unif S=" + Str(s_unif) + " geo S=" + Str(s_geo) +
                      " L=" + Str(l_geo) + " H_brute(40)=" +
                      Str(brute.entropy) + " residual=" +
                      Str(brute.residual_mass) + t.Notes()};
}

// Brute-force entropy with the length limit raised until the missing mass
// is negligible or the enumeration budget runs out.
bool HasCycle(const FiniteAutomaton &a) {
  if (StronglyConnectedComponents(Digraph::FromAutomaton(a)).num_components <
      a.num_states()) {
    return true;
  }
  for (const Transition &t : a.transitions()) {
    if (t.source == t.target) return true;
  }
  return false;
}

// Doubles the length limit until the enumerated strings carry all but
// kConvergedResidual of the mass or the string budget runs out.
constexpr double kConvergedResidual = 1e-10;

BruteEntropy BruteUntilSmallResidual(const ProbabilisticAutomaton &pa) {
  BruteEntropy b;
  for (std::size_t len = 8; len <= 1024; len *= 2) {
    b = ComputeBruteEntropy(pa, len, 1'000'000);
    if (b.residual_mass < kConvergedResidual || b.truncated) break;
  }
  return b;
}

Outcome EntropyBounds() {
  Tally t;
  double worst_residual = 0.0;
  std::size_t skeletons = 0;
  std::size_t cyclic = 0;
  std::size_t not_enumerable = 0;
  for (std::uint64_t seed = 20000; skeletons < 50; ++seed) {
    Uniform u(seed);
    RandomAutomatonParams p;
    p.states = 2 + u.Below(4);
    p.symbols = 1 + u.Below(2);
    p.density = 0.15 + 0.25 * u();
    p.eps_density = 0.2 * u();
    p.seed = seed;
    const FiniteAutomaton sk = RandomAutomaton(p);
    if (sk.num_states() == 0) continue;
    if (Classify(sk).ambiguity != AmbiguityClass::kFinite) continue;
    const ProbabilisticAutomaton pa =
        ValidateProbabilistic(RandomProbabilistic(sk, seed));
    const BruteEntropy b = BruteUntilSmallResidual(pa);
    // A truncated sum only bounds H from below; such skeletons cannot
    // check the upper bound.
    if (b.residual_mass >= kConvergedResidual) {
      ++not_enumerable;
      continue;
    }
    ++skeletons;
    if (HasCycle(sk)) ++cyclic;
    const double s = EntropySemiringEstimate(pa);
    worst_residual = std::max(worst_residual, b.residual_mass);
    const PathCount k = std::max<PathCount>(
        1, ComputeGrowthTable(sk, 12).MaxUpTo(12));
    const std::string id = "seed " + std::to_string(seed) + ": S=" + Str(s) +
                           " H=" + Str(b.entropy) + " k=" + std::to_string(k);
    t.Check(b.entropy - 1e-9 <= s, id + " below H");
    t.Check(s <= b.entropy + std::log(static_cast<double>(k)) + 1e-6,
            id + " above H + ln k");
  }

  const ProbabilisticAutomaton fin2 =
      ValidateProbabilistic(fixtures::Fin2Uniform());
  const double s_fin2 = EntropySemiringEstimate(fin2);
  const double h_fin2 = ComputeBruteEntropy(fin2, 4).entropy;
  t.Check(std::abs(s_fin2 - h_fin2 - kLn2) <= 1e-9,
          "fin2 S-H = " + Str(s_fin2 - h_fin2));

  const std::vector<std::pair<std::string, ProbAutomaton>> poly{
      {"poly1", fixtures::Poly1Prob()},
      {"poly2", RandomProbabilistic(fixtures::Poly2(), 1)},
      {"eps", RandomProbabilistic(fixtures::Eps(), 2)}};
  std::string poly_notes;
  for (const auto &[name, w] : poly) {
    const ProbabilisticAutomaton pa = ValidateProbabilistic(w);
    const double s = EntropySemiringEstimate(pa);
    const double l = ExpectedLength(pa);
    const std::size_t d = Classify(pa.skeleton()).degree;
    const BruteEntropy b = BruteUntilSmallResidual(pa);
    worst_residual = std::max(worst_residual, b.residual_mass);
    const std::string id = name + ": S=" + Str(s) + " H=" + Str(b.entropy) +
                           " L=" + Str(l) + " d=" + std::to_string(d);
    poly_notes += " " + name + "(L=" + Str(l) + ")";
    t.Check(b.entropy - 1e-9 <= s, id + " below H");
    if (l > 1.0) {
      t.Check(s <= b.entropy + static_cast<double>(d) * std::log(l) + 1e-6,
              id + " above H + d ln L");
    }
  }
  return {t.ok(), std::to_string(skeletons) + " finite skeletons (" +
                      std::to_string(cyclic) + " cyclic, " +
                      std::to_string(not_enumerable) +
                      " skipped as not enumerable); fin2 S-H=" + Str(s_fin2 - h_fin2) +
                      ";" + poly_notes + "; worst residual mass " +
                      Str(worst_residual) + t.Notes()};
}

FiniteAutomaton ScalingMember(std::size_t states, std::uint64_t seed) {
  RandomAutomatonParams p;
  p.states = states;
  p.symbols = 2;
  // About five transitions per state and symbol.
  p.density = 5.0 / static_cast<double>(states);
  p.seed = seed;
  return RandomAutomaton(p);
}

// Fastest of several runs per input. Runs alternate between the inputs so
// that machine drift hits both alike.
std::pair<double, double> FastestEdaSeconds(const FiniteAutomaton &a,
                                            const FiniteAutomaton &b) {
  double best_a = 1e300;
  double best_b = 1e300;
  for (int r = 0; r < 7; ++r) {
    auto start = Clock::now();
    TestEda(a);
    best_a = std::min(best_a, Seconds(start));
    start = Clock::now();
    TestEda(b);
    best_b = std::min(best_b, Seconds(start));
  }
  return {best_a, best_b};
}

Outcome Scale(const std::vector<FiniteAutomaton> &corpus) {
  Tally t;
  for (const FiniteAutomaton &a : corpus) {
    const std::size_t n = a.num_states();
    t.Check(Square(a).underlying().num_states() <= 3 * n * n,
            "square state bound violated");
  }
  const FiniteAutomaton big = ScalingMember(100, 31);
  const auto start = Clock::now();
  const AmbiguityReport r = Classify(big);
  const double secs = Seconds(start);
  const std::size_t n = big.num_states();
  const std::size_t sq = Square(big).underlying().num_states();
  t.Check(sq <= 3 * n * n, "square state bound violated on the large input");
  t.Check(secs < 30.0, "classification took " + Str(secs) + " s");

  const FiniteAutomaton half = ScalingMember(100, 32);
  const FiniteAutomaton full = ScalingMember(200, 33);
  const std::size_t sq_full = Square(full).underlying().num_states();
  t.Check(sq_full <= 3 * full.num_states() * full.num_states(),
          "square state bound violated on the doubled input");
  const auto [t_half, t_full] = FastestEdaSeconds(half, full);
  const double ratio = t_full / t_half;
  t.Check(ratio <= 5.0, "doubling ratio " + Str(ratio));
  std::ostringstream s;
  s << "|E|=" << big.num_transitions() << " |Q|=" << n << " classified "
    << ToLine(r) << " in " << Str(secs) << " s, square " << sq
    << " states; EDA test " << Str(t_half) << " s at |E|="
    << half.num_transitions() << ", " << Str(t_full) << " s at |E|="
    << full.num_transitions() << " (ratio " << Str(ratio) << ")"
    << t.Notes();
  return {t.ok(), s.str()};
}

int Main() {
  const std::vector<FiniteAutomaton> corpus = testing::RandomCorpus(100, 0);
  const std::vector<std::pair<std::string, std::function<Outcome()>>>
      criteria{
          {"fixture classifications", FixtureClassifications},
          {"path-count product", PathCountProduct},
          {"filter uniqueness", FilterUniqueness},
          {"metamorphic invariance", [&] { return Metamorphic(corpus); }},
          {"witness validity", [&] { return Witnesses(corpus); }},
          {"oracle growth consistency", [&] { return Growth(corpus); }},
          {"entropy exact values", EntropyValues},
          {"entropy bounds", EntropyBounds},
          {"scale and complexity", [&] { return Scale(corpus); }},
      };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o{false, ""};
    const auto start = Clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failed;
    std::printf("[%s] %zu %s (%.2f s): %s\n", o.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), Seconds(start), o.summary.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace ambig

int main() { return ambig::Main(); }
