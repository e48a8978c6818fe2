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

#include <gtest/gtest.h>

#include <set>

#include "ambig/entropy.h"
#include "ambig/error.h"
#include "ambig/fixtures.h"
#include "ambig/oracle.h"
#include "test_util.h"

namespace ambig {
namespace {

std::size_t ParseErrorLine(std::string_view text, ErrorCode *code = nullptr) {
  try {
    ParseAutomaton(text);
  } catch (const ParseError &e) {
    if (code) *code = e.code();
    return e.line();
  }
  ADD_FAILURE() << "no parse error for: " << text;
  return 0;
}

TEST(ParseTest, SmallUnweighted) {
  const AnyAutomaton any = ParseAutomaton("initial 0\nfinal 1\ntrans 0 1 a\n");
  const auto &a = std::get<FiniteAutomaton>(any);
  EXPECT_EQ(a.num_states(), 2u);
  EXPECT_EQ(testing::CountTokens(a, {"a"}), 1u);
  EXPECT_EQ(testing::CountTokens(a, {}), 0u);
  EXPECT_EQ(testing::CountTokens(a, {"a", "a"}), 0u);
}

TEST(ParseTest, GeoWeighted) {
  const AnyAutomaton any =
      ParseAutomaton("initial 0 1.0\nfinal 0 0.5\ntrans 0 0 a 0.5\n");
  const auto &w = std::get<ProbAutomaton>(any);
  EXPECT_NEAR(ValidateProbabilistic(w).mass(), 1.0, 1e-9);
}

TEST(ParseTest, CommentsBlankLinesAndEpsilon) {
  const AnyAutomaton any = ParseAutomaton(
      "# a comment\n\ninitial 0\n  # indented comment\nfinal 2\n"
      "trans 0 1 <eps>\ntrans 1 2 x\n");
  const auto &a = std::get<FiniteAutomaton>(any);
  EXPECT_EQ(a.num_epsilon_transitions(), 1u);
  EXPECT_EQ(a.alphabet(), std::vector<std::string>{"x"});
}

TEST(ParseTest, Utf8Labels) {
  const AnyAutomaton any =
      ParseAutomaton("initial 0\nfinal 1\ntrans 0 1 \xce\xb1\n");
  const auto &a = std::get<FiniteAutomaton>(any);
  EXPECT_EQ(a.alphabet(), std::vector<std::string>{"\xce\xb1"});
  EXPECT_EQ(SplitSymbols(a, "\xce\xb1\xce\xb1").size(), 2u);
}

TEST(ParseTest, Errors) {
  EXPECT_EQ(ParseErrorLine("trans 0 1\n"), 1u);
  EXPECT_EQ(ParseErrorLine("initial 0\nfinal x\n"), 2u);
  EXPECT_EQ(ParseErrorLine("initial 0\r\n"), 1u);
  EXPECT_EQ(ParseErrorLine("initial 0\nstart 1\n"), 2u);
  EXPECT_EQ(ParseErrorLine("initial 0\ninitial 0\n"), 2u);
  EXPECT_EQ(ParseErrorLine("final 0 1 2\n"), 1u);
  EXPECT_EQ(ParseErrorLine("initial 0 abc\n"), 1u);
  EXPECT_EQ(ParseErrorLine("initial 0 inf\n"), 1u);
  EXPECT_EQ(ParseErrorLine("initial 0 nan\n"), 1u);
  EXPECT_EQ(ParseErrorLine("initial -1\n"), 1u);
  ErrorCode code = ErrorCode::kInternal;
  EXPECT_EQ(ParseErrorLine("initial 0 1.0\nfinal 1\n", &code), 2u);
  EXPECT_EQ(code, ErrorCode::kMixedWeightedness);
}

TEST(ParseTest, DuplicateTransitionIsInvalid) {
  try {
    ParseAutomaton("initial 0\ntrans 0 1 a\ntrans 0 1 a\n");
    ADD_FAILURE();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicateTransition);
  }
}

TEST(SerializeTest, CanonicalOrder) {
  const FiniteAutomaton a = testing::Build(
      {1}, {0}, {{1, "b", 0}, {0, "a", 1}, {1, "a", 0}, {0, "<eps>", 1}});
  EXPECT_EQ(SerializeAutomaton(a),
            "initial 1\nfinal 0\ntrans 0 1 <eps>\ntrans 0 1 a\n"
            "trans 1 0 a\ntrans 1 0 b\n");
}

TEST(SerializeTest, FixturesRoundTrip) {
  for (const FiniteAutomaton &a :
       {fixtures::Fin2(), fixtures::Poly1(), fixtures::Poly2(),
        fixtures::Exp(), fixtures::Eps(), fixtures::EpsCycle()}) {
    EXPECT_EQ(std::get<FiniteAutomaton>(ParseAutomaton(SerializeAutomaton(a))),
              a);
  }
  for (const ProbAutomaton &w :
       {fixtures::Unif(), fixtures::Geo(), fixtures::Fin2Uniform(),
        fixtures::Poly1Prob()}) {
    const std::string text = SerializeAutomaton(w);
    const auto back = std::get<ProbAutomaton>(ParseAutomaton(text));
    EXPECT_EQ(back.skeleton(), w.skeleton());
    EXPECT_EQ(SerializeAutomaton(back), text);
  }
}

TEST(SerializeTest, RandomRoundTrip) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const FiniteAutomaton a = testing::RandomSmall(seed, 7, 3, 0.3);
    const std::string text = SerializeAutomaton(a);
    const FiniteAutomaton back =
        std::get<FiniteAutomaton>(ParseAutomaton(text));
    EXPECT_EQ(SerializeAutomaton(back), text);
    EXPECT_EQ(back.num_states(), a.num_states());
    std::set<Label> used;
    for (const Transition &t : a.transitions()) {
      if (t.label != kEpsilon) used.insert(t.label);
    }
    if (used.size() == a.alphabet().size()) EXPECT_EQ(back, a);
    // An empty file carries no weights to tell it apart.
    if (a.num_states() == 0) continue;

    const ProbAutomaton w = RandomProbabilistic(a, seed);
    const std::string wtext = SerializeAutomaton(w);
    const auto wback = std::get<ProbAutomaton>(ParseAutomaton(wtext));
    EXPECT_EQ(SerializeAutomaton(wback), wtext);
    // Weights survive exactly, transition by transition.
    for (TransitionId t = 0; t < w.skeleton().num_transitions(); ++t) {
      const Transition &tr = w.skeleton().transition(t);
      for (TransitionId u = 0; u < wback.skeleton().num_transitions(); ++u) {
        const Transition &ur = wback.skeleton().transition(u);
        if (ur.source == tr.source && ur.target == tr.target &&
            wback.skeleton().label_name(ur.label) ==
                w.skeleton().label_name(tr.label)) {
          EXPECT_EQ(wback.weight(u), w.weight(t));
        }
      }
    }
  }
}

TEST(SerializeTest, ProductHeader) {
  const ProductAutomaton p = Square(fixtures::Poly1());
  const std::string text = SerializeProduct(p);
  EXPECT_EQ(text.rfind("# product of 2 automata, ", 0), 0u);
  EXPECT_NE(text.find("# state 0 = ("), std::string::npos);
  EXPECT_NE(text.find(") filter F"), std::string::npos);
  const auto back = std::get<FiniteAutomaton>(ParseAutomaton(text));
  EXPECT_EQ(back, p.underlying());
}

}  // namespace
}  // namespace ambig
