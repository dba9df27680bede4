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

#pragma once

#include <cstddef>

#include "harmonic.hpp"
#include "lcs.hpp"

namespace harmdist {

// The two halves of a distance: inserting symbols to grow `a` into a
// shortest common supersequence, then deleting down to `b`.
struct DistanceBreakdown {
  double insertion_cost = 0.0;  // H_|scs| - H_|a|
  double deletion_cost = 0.0;   // H_|scs| - H_|b|
  double total = 0.0;
};

// Harmonic edit distance 2 H_|scs(a,b)| - H_|a| - H_|b|, evaluated as
// (H_|scs| - H_|a|) + (H_|scs| - H_|b|). Unbounded: d(empty, b) = H_|b|.
// Symmetric bit for bit.
double distance(SymbolSpan a, SymbolSpan b, const HarmonicTable& table = default_table(),
                Engine engine = Engine::Auto);

DistanceBreakdown distance_decomposed(SymbolSpan a, SymbolSpan b,
                                      const HarmonicTable& table = default_table(),
                                      Engine engine = Engine::Auto);

// H_|b| - H_|a| for a subsequence a of b. Throws PreconditionError otherwise.
double distance_subsequence(SymbolSpan a, SymbolSpan b,
                            const HarmonicTable& table = default_table());

// Exact rational value. Throws CapacityError when |a| + |b| > kExactHarmonicLimit.
ExactHarmonic distance_exact(SymbolSpan a, SymbolSpan b, Engine engine = Engine::Auto);

// The distance depends only on |a|, |b| and the LCS length.
double distance_from_lengths(std::size_t len_a, std::size_t len_b, std::size_t lcs,
                             const HarmonicTable& table = default_table());
ExactHarmonic distance_exact_from_lengths(std::size_t len_a, std::size_t len_b,
                                          std::size_t lcs);

}  // namespace harmdist
