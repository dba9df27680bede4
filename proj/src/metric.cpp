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

#include "metric.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "errors.hpp"

namespace harmdist {

namespace {

// Orders the pair by (length, ids) so that evaluation never depends on
// argument order.
std::pair<SymbolSpan, SymbolSpan> canonical(SymbolSpan a, SymbolSpan b) {
  if (a.size() != b.size()) {
    return a.size() < b.size() ? std::pair{a, b} : std::pair{b, a};
  }
  const bool a_first = std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  return a_first ? std::pair{a, b} : std::pair{b, a};
}

void check_lengths(std::size_t len_a, std::size_t len_b, std::size_t lcs) {
  if (lcs > std::min(len_a, len_b)) {
    throw PreconditionError("LCS length " + std::to_string(lcs) +
                            " exceeds the shorter string length");
  }
}

}  // namespace

double distance_from_lengths(std::size_t len_a, std::size_t len_b, std::size_t lcs,
                             const HarmonicTable& table) {
  check_lengths(len_a, len_b, lcs);
  const std::size_t scs = len_a + len_b - lcs;
  const auto [lo, hi] = std::minmax(len_a, len_b);
  return table.diff(lo, scs) + table.diff(hi, scs);
}

ExactHarmonic distance_exact_from_lengths(std::size_t len_a, std::size_t len_b,
                                          std::size_t lcs) {
  check_lengths(len_a, len_b, lcs);
  if (len_a + len_b > kExactHarmonicLimit) {
    throw CapacityError("exact distance limited to |a| + |b| <= " +
                        std::to_string(kExactHarmonicLimit));
  }
  const std::size_t scs = len_a + len_b - lcs;
  const mpq_class& h_scs = harmonic_exact_ref(scs).value();
  return ExactHarmonic(mpq_class(2 * h_scs - harmonic_exact_ref(len_a).value() -
                                 harmonic_exact_ref(len_b).value()));
}

double distance(SymbolSpan a, SymbolSpan b, const HarmonicTable& table, Engine engine) {
  const auto [shorter, longer] = canonical(a, b);
  if (shorter.size() == longer.size()) {
    // Same length: a subsequence is an equal string.
    if (std::equal(shorter.begin(), shorter.end(), longer.begin())) return 0.0;
  } else if (is_subsequence(shorter, longer)) {
    return table.diff(shorter.size(), longer.size());
  }
  return distance_from_lengths(shorter.size(), longer.size(),
                               lcs_len(shorter, longer, engine), table);
}

DistanceBreakdown distance_decomposed(SymbolSpan a, SymbolSpan b, const HarmonicTable& table,
                                      Engine engine) {
  const auto [shorter, longer] = canonical(a, b);
  const std::size_t scs = scs_len(shorter, longer, engine);
  DistanceBreakdown out;
  out.insertion_cost = table.diff(a.size(), scs);
  out.deletion_cost = table.diff(b.size(), scs);
  const std::size_t lo = std::min(a.size(), b.size());
  const std::size_t hi = std::max(a.size(), b.size());
  out.total = table.diff(lo, scs) + table.diff(hi, scs);
  return out;
}

double distance_subsequence(SymbolSpan a, SymbolSpan b, const HarmonicTable& table) {
  if (!is_subsequence(a, b)) {
    throw PreconditionError("distance_subsequence: first argument is not a subsequence of the second");
  }
  return table.diff(a.size(), b.size());
}

ExactHarmonic distance_exact(SymbolSpan a, SymbolSpan b, Engine engine) {
  if (a.size() + b.size() > kExactHarmonicLimit) {
    throw CapacityError("exact distance limited to |a| + |b| <= " +
                        std::to_string(kExactHarmonicLimit));
  }
  const auto [shorter, longer] = canonical(a, b);
  return distance_exact_from_lengths(shorter.size(), longer.size(),
                                     lcs_len(shorter, longer, engine));
}

}  // namespace harmdist
