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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>

#include <gtest/gtest.h>

#include "errors.hpp"
#include "harmonic.hpp"
#include "oracles.hpp"

namespace harmdist {
namespace {

const HarmonicTable& table() { return default_table(); }

TEST(Harmonic, SmallValues) {
  EXPECT_EQ(harmonic(table(), 0), 0.0);
  EXPECT_EQ(harmonic(table(), 1), 1.0);
  EXPECT_NEAR(harmonic(table(), 4), 25.0 / 12.0, 1e-15);
  EXPECT_NEAR(harmonic(table(), 20), 55835135.0 / 15519504.0, 1e-14);
}

TEST(Harmonic, DiffExamples) {
  EXPECT_EQ(harmonic_diff(table(), 7, 7), 0.0);
  EXPECT_EQ(harmonic_diff(table(), 1, 2), 0.5);
  EXPECT_NEAR(harmonic_diff(table(), 10, 11), 1.0 / 11.0, 1e-16);
  EXPECT_THROW(harmonic_diff(table(), 3, 2), PreconditionError);
}

TEST(Harmonic, ExactValues) {
  EXPECT_EQ(harmonic_exact(0).str(), "0/1");
  EXPECT_EQ(harmonic_exact(2).str(), "3/2");
  EXPECT_EQ(harmonic_exact(4).str(), "25/12");
  EXPECT_EQ(harmonic_exact(10).str(), "7381/2520");
  EXPECT_THROW(harmonic_exact(kExactHarmonicLimit + 1), CapacityError);
  const auto h = harmonic_exact(kExactHarmonicLimit);
  EXPECT_EQ(gcd(h.numerator(), h.denominator()), 1);
  EXPECT_GT(h.denominator(), 0);
}

TEST(Harmonic, ExactMatchesDirectSummation) {
  for (std::size_t n : {0u, 1u, 5u, 37u, 100u, 613u}) {
    EXPECT_EQ(harmonic_exact(n).value(), testing::exact_harmonic(n)) << n;
  }
}

TEST(HarmonicTable, InvariantsAgainstExactOracle) {
  const auto values = table().values();
  const auto exact = testing::exact_harmonic_table(kExactHarmonicLimit);
  EXPECT_EQ(values[0], 0.0);
  for (std::size_t n = 1; n <= kExactHarmonicLimit; ++n) {
    const mpq_class err = mpq_class(values[n]) - exact[n];
    ASSERT_LE(std::abs(err.get_d()), 1e-12) << n;
  }
}

TEST(HarmonicTable, StrictlyIncreasingWithUnitSteps) {
  const auto values = table().values();
  for (std::size_t n = 1; n < values.size(); ++n) {
    ASSERT_LT(values[n - 1], values[n]) << n;
    // A step between two correctly rounded neighbours is exact to one ulp of
    // the larger value; for H_n < 8 that is at most 2^-50.
    const double bound = std::max(std::ldexp(1.0, -50), std::nextafter(values[n], 1e300) - values[n]);
    const long double step = static_cast<long double>(values[n]) - values[n - 1];
    ASSERT_LE(std::abs(step - 1.0L / n), bound) << n;
  }
}

TEST(HarmonicTable, AsymptoticAgreementBeyondExactRange) {
  const auto values = table().values();
  for (std::size_t n = 20000; n < values.size(); n += 9973) {
    EXPECT_NEAR(values[n], harmonic_asymptotic(n), 1e-12) << n;
  }
}

TEST(HarmonicTable, ReverseSummationAgrees) {
  const std::size_t n = table().capacity();
  long double reverse = 0.0L;
  for (std::size_t i = n; i >= 1; --i) reverse += 1.0L / static_cast<long double>(i);
  EXPECT_NEAR(static_cast<double>(reverse), table().values()[n], 1e-12);
}

TEST(HarmonicTable, TailContinuityAtBoundary) {
  const std::size_t n = table().capacity();
  const double step = harmonic(table(), n + 1) - harmonic(table(), n);
  const double expected = 1.0 / static_cast<double>(n + 1);
  EXPECT_NEAR(step, expected, 1e-12);
  EXPECT_GE(harmonic(table(), n + 1), harmonic(table(), n));
  for (std::size_t k = n + 1; k < n + 100; ++k) {
    EXPECT_LT(harmonic(table(), k), harmonic(table(), k + 1));
  }
}

TEST(HarmonicTable, SmallCapacityIsRaised) {
  const HarmonicTable small(3);
  EXPECT_EQ(small.capacity(), kMinTableCapacity);
  const std::size_t n = small.capacity();
  EXPECT_NEAR(small(n + 1) - small(n), 1.0 / static_cast<double>(n + 1), 1e-12);
  EXPECT_NEAR(small(n + 1), table()(n + 1), 1e-12);
}

TEST(HarmonicTable, DiffIsAdditive) {
  const std::size_t cap = table().capacity();
  const std::size_t probes[] = {0, 1, 2, 10, 63, 64, 65, 500, 4096, 100000, cap - 3, cap, cap + 50};
  for (std::size_t lo : probes) {
    for (std::size_t mid : probes) {
      for (std::size_t hi : probes) {
        if (!(lo <= mid && mid <= hi)) continue;
        const double whole = harmonic_diff(table(), lo, hi);
        const double parts = harmonic_diff(table(), lo, mid) + harmonic_diff(table(), mid, hi);
        EXPECT_NEAR(whole, parts, 1e-12) << lo << " " << mid << " " << hi;
      }
    }
  }
}

TEST(HarmonicTable, DiffIsAdditiveOnRandomSplits) {
  std::mt19937_64 rng(8);
  const std::size_t cap = table().capacity();
  for (int i = 0; i < 20000; ++i) {
    std::size_t v[3];
    for (auto& x : v) x = rng() % (cap + 1);
    // Mix wide spans with short ones that take the direct-summation path.
    if (i % 2) v[1] = std::min(cap, v[0] + rng() % 80);
    if (i % 4 == 1) v[2] = std::min(cap, v[1] + rng() % 80);
    std::sort(v, v + 3);
    const double lhs = harmonic_diff(table(), v[0], v[2]);
    const double rhs = harmonic_diff(table(), v[0], v[1]) + harmonic_diff(table(), v[1], v[2]);
    ASSERT_LE(std::abs(lhs - rhs), 1e-12) << v[0] << " " << v[1] << " " << v[2];
  }
}

TEST(HarmonicTable, ShortDiffAvoidsCancellation) {
  // 1/(n+1) near the top of the table, where H_n ~ 14.4.
  const std::size_t n = table().capacity() - 1;
  const double d = harmonic_diff(table(), n, n + 1);
  EXPECT_DOUBLE_EQ(d, 1.0 / static_cast<double>(n + 1));
}

TEST(HarmonicTable, EnvironmentOverride) {
  ::setenv("HARMDIST_TABLE_SIZE", "5000", 1);
  EXPECT_EQ(table_capacity_from_env(), 5000u);
  ::setenv("HARMDIST_TABLE_SIZE", "junk", 1);
  EXPECT_EQ(table_capacity_from_env(), kDefaultTableCapacity);
  ::unsetenv("HARMDIST_TABLE_SIZE");
  EXPECT_EQ(table_capacity_from_env(), kDefaultTableCapacity);
}

}  // namespace
}  // namespace harmdist
