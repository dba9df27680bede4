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
#include <optional>
#include <span>
#include <string_view>

#include "symbols.hpp"

namespace harmdist {

using SymbolSpan = std::span<const Symbol>;

enum class Engine { Auto, Dp, BitParallel, HuntSzymanski, BruteForce };

// Dispatch heuristics for Engine::Auto. Correctness never depends on them.
inline constexpr std::size_t kBitParallelMinLength = 64;
inline constexpr double kSparseMatchDensity = 1.0 / 16.0;
// Largest shorter-string length the brute-force engine accepts.
inline constexpr std::size_t kBruteForceLimit = 20;

// Classic recurrence with two rows of min(|a|,|b|)+1 cells.
std::size_t lcs_len_dp(SymbolSpan a, SymbolSpan b);

// Row-wise bit-vector recurrence: one pass over the shorter-packed string per
// symbol of the other, carrying additions across 64-bit words.
std::size_t lcs_len_bitparallel(SymbolSpan a, SymbolSpan b);

// Threshold-array algorithm over matching position pairs.
std::size_t lcs_len_hunt_szymanski(SymbolSpan a, SymbolSpan b);

// Enumerates every subsequence of the shorter string. Throws CapacityError
// when min(|a|,|b|) > kBruteForceLimit.
std::size_t lcs_len_bruteforce(SymbolSpan a, SymbolSpan b);

// Engine::Auto resolution for this pair.
Engine choose_engine(SymbolSpan a, SymbolSpan b);

std::size_t lcs_len(SymbolSpan a, SymbolSpan b, Engine engine = Engine::Auto);

// |a| + |b| - lcs_len(a, b).
std::size_t scs_len(SymbolSpan a, SymbolSpan b, Engine engine = Engine::Auto);

// True iff a is obtained from b by deleting zero or more symbols.
bool is_subsequence(SymbolSpan a, SymbolSpan b) noexcept;

std::string_view engine_name(Engine engine) noexcept;
std::optional<Engine> parse_engine(std::string_view name) noexcept;

}  // namespace harmdist
