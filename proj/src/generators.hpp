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
#include <cstdint>
#include <random>
#include <vector>

#include "symbols.hpp"

namespace harmdist {

// Universes larger than this are refused by exhaustive enumeration.
inline constexpr std::size_t kMaxUniverse = 100000;

// Seeded source with a platform-independent output sequence (the standard
// fixes mt19937_64; the reductions below avoid the unspecified
// distribution classes).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform on [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  // Uniform on [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

// Independent stream seed for (seed, stream) via splitmix64.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

SymbolSeq random_string_of_length(Rng& rng, std::size_t alphabet, std::size_t length);
// Length uniform on [0, max_length].
SymbolSeq random_string(Rng& rng, std::size_t alphabet, std::size_t max_length);
// Applies up to max_edits random single-symbol insertions or deletions,
// never growing past max_length.
SymbolSeq mutate(Rng& rng, const SymbolSeq& base, std::size_t alphabet,
                 std::size_t max_edits, std::size_t max_length);

// Deletes each symbol independently with probability p.
SymbolSeq random_subsequence(Rng& rng, const SymbolSeq& base, double p);

struct Chain {
  SymbolSeq a;  // subsequence of b
  SymbolSeq b;  // subsequence of c
  SymbolSeq c;
};

// c random with length on [0, max_length]; b and a by random deletions.
Chain random_chain(Rng& rng, std::size_t alphabet, std::size_t max_length);

// Number of strings of length <= max_length, saturating at SIZE_MAX.
std::size_t universe_size(std::size_t alphabet, std::size_t max_length) noexcept;

// Every string of length <= max_length, ordered by length then ids.
// Throws CapacityError above kMaxUniverse strings.
std::vector<SymbolSeq> enumerate_universe(std::size_t alphabet, std::size_t max_length);

}  // namespace harmdist
