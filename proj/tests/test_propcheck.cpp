// Copyright 2026 The harmdist Authors.
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

#include <stdexcept>

#include <gtest/gtest.h>

#include "errors.hpp"
#include "propcheck.hpp"

namespace harmdist::propcheck {
namespace {

GenConfig exhaustive(std::size_t alphabet, std::size_t max_length) {
  GenConfig c;
  c.alphabet_size = alphabet;
  c.max_length = max_length;
  c.mode = Mode::Exhaustive;
  return c;
}

GenConfig random(std::size_t alphabet, std::size_t max_length, std::uint64_t samples,
                 std::uint64_t seed) {
  GenConfig c;
  c.alphabet_size = alphabet;
  c.max_length = max_length;
  c.sample_count = samples;
  c.seed = seed;
  c.mode = Mode::Random;
  return c;
}

bool is_violation(const Counterexample& cx, const DistanceModel& model) {
  try {
    return evaluate(cx.property, cx.arithmetic, model, cx.a, cx.b, cx.c).violated;
  } catch (const std::logic_error&) {
    return false;
  }
}

// No single-symbol deletion from any component keeps the violation.
bool locally_minimal(const Counterexample& cx, const DistanceModel& model) {
  const int arity = is_pair_property(cx.property) ? 2 : 3;
  for (int slot = 0; slot < arity; ++slot) {
    const SymbolSeq& s = slot == 0 ? cx.a : slot == 1 ? cx.b : cx.c;
    for (std::size_t pos = 0; pos < s.size(); ++pos) {
      Counterexample next = cx;
      (slot == 0 ? next.a : slot == 1 ? next.b : next.c) = s.without(pos);
      if (is_violation(next, model)) return false;
    }
  }
  return true;
}

TEST(Axioms, ExhaustiveBinaryRational) {
  const auto r = verify_metric_axioms(exhaustive(2, 4));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.universe, 31u);
  EXPECT_EQ(r.find(Property::Triangle)->checked, 29791u);
  EXPECT_EQ(r.find(Property::Symmetry)->checked, 961u);
  EXPECT_EQ(r.find(Property::Identity)->checked, 961u);
  EXPECT_GE(r.find(Property::Triangle)->min_exact_slack->sign(), 0);
  EXPECT_EQ(r.find(Property::Triangle)->min_exact_slack->str(), "0/1");
}

TEST(Axioms, ExhaustiveFloatAgrees) {
  const auto r = verify_metric_axioms(exhaustive(3, 2), {.arithmetic = Arithmetic::Float});
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.find(Property::Triangle)->checked, 13u * 13u * 13u);
}

TEST(Axioms, RandomFloatLongStrings) {
  auto config = random(26, 200, 20000, 42);
  const auto r = verify_metric_axioms(config, {.arithmetic = Arithmetic::Float});
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.find(Property::Triangle)->checked, 20000u);
  config.generator = Generator::Correlated;
  config.alphabet_size = 4;
  EXPECT_TRUE(verify_metric_axioms(config, {.arithmetic = Arithmetic::Float}).passed());
}

TEST(Axioms, RandomRationalCorrelated) {
  auto config = random(3, 40, 3000, 9);
  config.generator = Generator::Correlated;
  const auto r = verify_metric_axioms(config);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.find(Property::Triangle)->min_exact_slack.has_value());
}

TEST(Axioms, ZeroSamplesIsVacuous) {
  const auto r = verify_metric_axioms(random(2, 4, 0, 1));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.find(Property::Triangle)->checked, 0u);
}

TEST(Axioms, InfeasibleUniverse) {
  EXPECT_THROW(verify_metric_axioms(exhaustive(2, 20)), CapacityError);
  EXPECT_THROW(verify_metric_axioms(exhaustive(0, 2)), UsageError);
}

TEST(Axioms, DeterministicAcrossWorkerCounts) {
  const auto config = random(3, 30, 3000, 5);
  const std::string one = to_json({verify_metric_axioms(config, {.workers = 1})});
  const std::string four = to_json({verify_metric_axioms(config, {.workers = 4})});
  EXPECT_EQ(one, four);
  const std::string again = to_json({verify_metric_axioms(config, {.workers = 1})});
  EXPECT_EQ(one, again);
}

TEST(Lemmas, ScsEqualityExhaustive) {
  const auto pairs = make_pairs(exhaustive(2, 4));
  ASSERT_EQ(pairs.size(), 961u);
  EXPECT_TRUE(verify_lemma_scs(pairs).passed());
  EXPECT_TRUE(verify_lemma_scs(pairs, {.arithmetic = Arithmetic::Float}).passed());
}

TEST(Lemmas, ChainAdditivity) {
  const auto chains = make_chains(random(3, 100, 2000, 77));
  ASSERT_EQ(chains.size(), 2000u);
  for (const auto& ch : chains) {
    ASSERT_TRUE(is_subsequence(ch.a, ch.b));
    ASSERT_TRUE(is_subsequence(ch.b, ch.c));
  }
  EXPECT_TRUE(verify_lemma_chain(chains).passed());
  EXPECT_TRUE(verify_lemma_chain(chains, {.arithmetic = Arithmetic::Float}).passed());
  EXPECT_EQ(make_chains(exhaustive(2, 4)).size(), 781u);
}

TEST(Lemmas, ChainPreconditionIsEnforced) {
  const DistanceModel model;
  EXPECT_THROW(evaluate(Property::LemmaChain, Arithmetic::Rational, model, {1}, {0}, {0, 0}),
               std::logic_error);
}

TEST(Lemmas, LcsTriangleSlack) {
  const auto pairs = make_pairs(exhaustive(3, 3));
  const auto r = verify_lemma_lcs_triangle(pairs);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.find(Property::LemmaLcsTriangle)->checked, 1600u);
  // "ab" vs "ba": lcs has length 1, slack = (H_2 - H_1) * 2 - d = 1 - 2(H_3 - H_2) = 1/3.
  const DistanceModel model;
  const auto e = evaluate(Property::LemmaLcsTriangle, Arithmetic::Rational, model, {0, 1}, {1, 0});
  EXPECT_EQ(e.exact_slack->str(), "1/3");
}

TEST(Lemmas, RunAllCoversEverySuite) {
  const auto reports = run_all(exhaustive(2, 3));
  ASSERT_EQ(reports.size(), 4u);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.passed()) << r.suite;
    EXPECT_EQ(r.universe, 15u);
  }
}

TEST(Fixture, BrokenLcsIsDetected) {
  CheckOptions options;
  options.fixture = Fixture::BrokenLcs;
  auto r = verify_metric_axioms(exhaustive(2, 4), options);
  EXPECT_FALSE(r.passed());
  EXPECT_GT(r.find(Property::Identity)->violations, 0u);
  const DistanceModel model(Fixture::BrokenLcs);
  shrink_counterexamples(r, model);
  ASSERT_FALSE(r.counterexamples.empty());
  for (const auto& cx : r.counterexamples) {
    EXPECT_TRUE(is_violation(cx, model));
    EXPECT_TRUE(locally_minimal(cx, model));
  }
  // "a" vs "b" has equal lengths, so the broken model puts them at distance 0.
  EXPECT_EQ(r.counterexamples.front().property, Property::Identity);
  EXPECT_EQ(r.counterexamples.front().a.size() + r.counterexamples.front().b.size(), 2u);
}

TEST(Shrink, ReachesLocalMinimumAndIsIdempotent) {
  const DistanceModel model(Fixture::BrokenLcs);
  Counterexample cx;
  cx.property = Property::Identity;
  cx.arithmetic = Arithmetic::Rational;
  cx.a = SymbolSeq{0, 1, 1, 0, 1, 0};
  cx.b = SymbolSeq{1, 1, 0, 0, 0, 1};
  // Equal lengths are what make the broken model collapse the pair, and any
  // single deletion breaks that, so the input is already minimal.
  const auto once = shrink(cx, model);
  EXPECT_TRUE(locally_minimal(once, model));
  EXPECT_EQ(once.a, cx.a);
  EXPECT_EQ(once.b, cx.b);
  ASSERT_TRUE(once.exact_slack.has_value());
  EXPECT_EQ(once.exact_slack->str(), "-1/12");
  const auto twice = shrink(once, model);
  EXPECT_EQ(twice.a, once.a);
  EXPECT_EQ(twice.b, once.b);
}

TEST(Shrink, RejectsNonViolations) {
  const DistanceModel model;
  Counterexample cx;
  cx.property = Property::Triangle;
  cx.a = SymbolSeq{0};
  cx.b = SymbolSeq{1};
  cx.c = SymbolSeq{0, 1};
  EXPECT_THROW(shrink(cx, model), PreconditionError);
}

TEST(Report, TextAndJsonShape) {
  const auto r = verify_metric_axioms(exhaustive(2, 2));
  const std::string text = to_text(r);
  EXPECT_NE(text.find("suite=metric_axioms"), std::string::npos);
  EXPECT_NE(text.find("property=triangle checked=343 violations=0"), std::string::npos);
  const std::string json = to_json({r});
  EXPECT_NE(json.find("\"passed\": true"), std::string::npos);
  EXPECT_EQ(format_seq(SymbolSeq{0, 1, 30}), "\"ab{30}\"");
}

}  // namespace
}  // namespace harmdist::propcheck
