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

#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "errors.hpp"
#include "generators.hpp"
#include "metric.hpp"
#include "oracles.hpp"

namespace harmdist {
namespace {

SymbolSeq seq(std::string_view text) { return bytes_to_seq(text); }

double oracle(const SymbolSeq& a, const SymbolSeq& b) {
  return testing::exact_distance(a.size(), b.size(), testing::full_table_lcs(a, b)).get_d();
}

// Values from the rational oracle, frozen.
TEST(Distance, FrozenValues) {
  EXPECT_EQ(distance(seq("abc"), seq("abc")), 0.0);
  EXPECT_NEAR(distance(seq("a"), seq("b")), 1.0, 1e-15);
  EXPECT_NEAR(distance(seq("abc"), seq("abd")), 0.5, 1e-15);
  EXPECT_NEAR(distance(seq(""), seq("ab")), 1.5, 1e-15);
  EXPECT_NEAR(distance(seq("ABCBDAB"), seq("BDCABA")), 0.6150793650793651, 1e-15);
  EXPECT_NEAR(distance(seq("kitten"), seq("sitting")), 155.0 / 252.0, 1e-15);
  EXPECT_NEAR(distance(seq("aaaaaaaaaaa"), seq("bbbbbbbbbbb")), 1.3418718106798602, 1e-14);
}

TEST(Distance, ExactFrozenValues) {
  EXPECT_EQ(distance_exact(seq("abc"), seq("abd")).str(), "1/2");
  EXPECT_EQ(distance_exact(seq(""), seq("ab")).str(), "3/2");
  EXPECT_EQ(distance_exact(seq("kitten"), seq("sitting")).str(), "155/252");
  EXPECT_EQ(distance_exact(seq("aaaaaaaaaa"), seq("aaaaaaaaab")).str(), "2/11");
  EXPECT_EQ(distance_exact(seq("x"), seq("x")).str(), "0/1");
}

TEST(Distance, SingleTrailingSymbolShrinksWithLength) {
  double previous = 2.0;
  for (std::size_t n = 1; n <= 40; ++n) {
    const SymbolSeq a(std::vector<Symbol>(n, 0));
    auto bv = a.ids();
    bv.back() = 1;
    const double d = distance(a, SymbolSeq(bv));
    EXPECT_NEAR(d, 2.0 / static_cast<double>(n + 1), 1e-15) << n;
    EXPECT_LT(d, previous);
    previous = d;
  }
}

TEST(Distance, OneInsertionCostsOneOverLongerLength) {
  Rng rng(40);
  double previous = 2.0;
  for (std::size_t n = 0; n <= 300; ++n) {
    const auto a = random_string_of_length(rng, 3, n);
    auto longer = a.ids();
    longer.insert(longer.begin() + static_cast<std::ptrdiff_t>(rng.below(n + 1)),
                  static_cast<Symbol>(rng.below(3)));
    const double d = distance(a, SymbolSeq(longer));
    EXPECT_NEAR(d, 1.0 / static_cast<double>(n + 1), 1e-15) << n;
    EXPECT_LT(d, previous);
    previous = d;
  }
}

TEST(Distance, DisjointEqualLengthsIncreaseTowardsTwoLnTwo) {
  double previous = 0.0;
  for (std::size_t n = 1; n <= 10000; ++n) {
    const double d = distance_from_lengths(n, n, 0);
    ASSERT_GT(d, previous) << n;
    ASSERT_LT(d, 2.0 * std::numbers::ln2) << n;
    previous = d;
  }
  EXPECT_NEAR(previous, 2.0 * std::numbers::ln2, 1e-4);
}

TEST(Distance, AgreesWithRationalOracle) {
  Rng rng(31);
  for (int i = 0; i < 500; ++i) {
    const std::size_t alphabet = 1 + rng.below(4);
    const auto a = random_string(rng, alphabet, 60);
    const auto b = rng.below(2) ? mutate(rng, a, alphabet, 5, 70) : random_string(rng, alphabet, 60);
    EXPECT_NEAR(distance(a, b), oracle(a, b), 1e-12);
    EXPECT_EQ(distance_exact(a, b).value(),
              testing::exact_distance(a.size(), b.size(), testing::full_table_lcs(a, b)));
  }
}

TEST(Distance, BitwiseSymmetricAndEngineIndependent) {
  Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_string(rng, 3, 150);
    const auto b = random_string(rng, 3, 150);
    const double d = distance(a, b);
    EXPECT_EQ(d, distance(b, a));
    EXPECT_EQ(d, distance(a, b, default_table(), Engine::Dp));
    EXPECT_EQ(d, distance(a, b, default_table(), Engine::HuntSzymanski));
    EXPECT_GE(d, 0.0);
    EXPECT_EQ(d == 0.0, a == b);
  }
}

TEST(Distance, EqualLengthBound) {
  // Two length-n strings are at most 2(H_2n - H_n) apart, which stays below
  // 2 ln 2.
  Rng rng(3);
  for (std::size_t n : {1u, 5u, 50u, 500u}) {
    const SymbolSeq a(std::vector<Symbol>(n, 0));
    const SymbolSeq b(std::vector<Symbol>(n, 1));
    const double d = distance(a, b);
    EXPECT_NEAR(d, 2.0 * harmonic_diff(default_table(), n, 2 * n), 1e-12);
    EXPECT_LT(d, 2.0 * std::numbers::ln2);
    const auto c = random_string_of_length(rng, 2, n);
    EXPECT_LE(distance(a, c), d + 1e-15);
  }
}

TEST(Distance, DecompositionSumsToTotal) {
  Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_string(rng, 3, 40);
    const auto b = random_string(rng, 3, 40);
    const auto parts = distance_decomposed(a, b);
    EXPECT_EQ(parts.total, distance(a, b));
    EXPECT_NEAR(parts.insertion_cost + parts.deletion_cost, parts.total, 1e-14);
    EXPECT_GE(parts.insertion_cost, 0.0);
    EXPECT_GE(parts.deletion_cost, 0.0);
  }
  const auto parts = distance_decomposed(seq("ab"), seq("abc"));
  EXPECT_NEAR(parts.insertion_cost, 1.0 / 3.0, 1e-15);
  EXPECT_EQ(parts.deletion_cost, 0.0);
}

TEST(Distance, SubsequenceShortcut) {
  EXPECT_NEAR(distance_subsequence(seq("ac"), seq("abcd")), 1.0 / 3.0 + 0.25, 1e-15);
  EXPECT_THROW(distance_subsequence(seq("ca"), seq("abcd")), PreconditionError);
  Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    const auto c = random_string(rng, 4, 80);
    const auto a = random_subsequence(rng, c, 0.6);
    EXPECT_NEAR(distance_subsequence(a, c), distance(a, c), 1e-15);
  }
}

TEST(Distance, LengthFormulaPreconditions) {
  EXPECT_THROW(distance_from_lengths(2, 3, 4), PreconditionError);
  EXPECT_THROW(distance_exact_from_lengths(2, 3, 3), PreconditionError);
  EXPECT_THROW(distance_exact_from_lengths(6000, 6000, 0), CapacityError);
  EXPECT_EQ(distance_from_lengths(0, 0, 0), 0.0);
}

TEST(Distance, LongInputsUseTableTail) {
  const HarmonicTable small(1024);
  const SymbolSeq a(std::vector<Symbol>(3000, 0));
  const SymbolSeq b(std::vector<Symbol>(3000, 1));
  EXPECT_NEAR(distance(a, b, small), distance(a, b), 1e-12);
}

}  // namespace
}  // namespace harmdist
