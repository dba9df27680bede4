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

#include "generators.hpp"

#include <limits>
#include <string>

#include "errors.hpp"

namespace harmdist {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SymbolSeq random_string_of_length(Rng& rng, std::size_t alphabet, std::size_t length) {
  std::vector<Symbol> ids(length);
  for (auto& id : ids) id = static_cast<Symbol>(rng.below(alphabet));
  return SymbolSeq(std::move(ids));
}

SymbolSeq random_string(Rng& rng, std::size_t alphabet, std::size_t max_length) {
  return random_string_of_length(rng, alphabet, rng.below(max_length + 1));
}

SymbolSeq mutate(Rng& rng, const SymbolSeq& base, std::size_t alphabet,
                 std::size_t max_edits, std::size_t max_length) {
  std::vector<Symbol> ids = base.ids();
  const std::size_t edits = rng.below(max_edits + 1);
  for (std::size_t e = 0; e < edits; ++e) {
    const bool insert = ids.empty() || (ids.size() < max_length && rng.below(2) == 0);
    if (insert) {
      if (ids.size() >= max_length) break;
      const auto pos = static_cast<std::ptrdiff_t>(rng.below(ids.size() + 1));
      ids.insert(ids.begin() + pos, static_cast<Symbol>(rng.below(alphabet)));
    } else {
      const auto pos = static_cast<std::ptrdiff_t>(rng.below(ids.size()));
      ids.erase(ids.begin() + pos);
    }
  }
  return SymbolSeq(std::move(ids));
}

SymbolSeq random_subsequence(Rng& rng, const SymbolSeq& base, double p) {
  std::vector<Symbol> ids;
  ids.reserve(base.size());
  for (const Symbol s : base) {
    if (rng.unit() >= p) ids.push_back(s);
  }
  return SymbolSeq(std::move(ids));
}

Chain random_chain(Rng& rng, std::size_t alphabet, std::size_t max_length) {
  Chain chain;
  chain.c = random_string(rng, alphabet, max_length);
  chain.b = random_subsequence(rng, chain.c, rng.unit() * 0.5);
  chain.a = random_subsequence(rng, chain.b, rng.unit() * 0.5);
  return chain;
}

std::size_t universe_size(std::size_t alphabet, std::size_t max_length) noexcept {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t total = 0;
  std::size_t layer = 1;
  for (std::size_t len = 0; len <= max_length; ++len) {
    if (total > kMax - layer) return kMax;
    total += layer;
    if (len == max_length) break;
    if (alphabet != 0 && layer > kMax / alphabet) return kMax;
    layer *= alphabet;
  }
  return total;
}

std::vector<SymbolSeq> enumerate_universe(std::size_t alphabet, std::size_t max_length) {
  const std::size_t count = universe_size(alphabet, max_length);
  if (count > kMaxUniverse) {
    throw CapacityError("universe of alphabet " + std::to_string(alphabet) +
                        " and max length " + std::to_string(max_length) + " exceeds " +
                        std::to_string(kMaxUniverse) + " strings");
  }
  std::vector<SymbolSeq> out;
  out.reserve(count);
  out.emplace_back();
  if (alphabet == 0) return out;
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (std::size_t s = 0; s < alphabet; ++s) {
        std::vector<Symbol> ids = out[i].ids();
        ids.push_back(static_cast<Symbol>(s));
        out.emplace_back(std::move(ids));
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

}  // namespace harmdist
