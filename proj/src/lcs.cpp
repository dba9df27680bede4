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

#include "lcs.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"

namespace harmdist {

namespace {

constexpr std::uint32_t kNoSlot = std::numeric_limits<std::uint32_t>::max();
// Above this id the slot lookup switches from a flat array to a hash map.
constexpr Symbol kFlatSlotLimit = Symbol{1} << 16;

// Assigns each distinct symbol of `seq` a dense slot number.
class SlotMap {
 public:
  explicit SlotMap(SymbolSpan seq) {
    Symbol max_id = 0;
    for (const Symbol s : seq) max_id = std::max(max_id, s);
    flat_ = max_id < kFlatSlotLimit;
    if (flat_) flat_slots_.assign(seq.empty() ? 0 : max_id + 1, kNoSlot);
    for (const Symbol s : seq) {
      if (find(s) == kNoSlot) {
        if (flat_) {
          flat_slots_[s] = count_;
        } else {
          hashed_slots_.emplace(s, count_);
        }
        ++count_;
      }
    }
  }

  std::uint32_t find(Symbol s) const {
    if (flat_) return s < flat_slots_.size() ? flat_slots_[s] : kNoSlot;
    const auto it = hashed_slots_.find(s);
    return it == hashed_slots_.end() ? kNoSlot : it->second;
  }

  std::uint32_t count() const { return count_; }

 private:
  bool flat_ = true;
  std::uint32_t count_ = 0;
  std::vector<std::uint32_t> flat_slots_;
  std::unordered_map<Symbol, std::uint32_t> hashed_slots_;
};

}  // namespace

std::size_t lcs_len_dp(SymbolSpan a, SymbolSpan b) {
  if (a.size() < b.size()) std::swap(a, b);
  // b is the shorter string and indexes the rows.
  const std::size_t m = b.size();
  if (m == 0) return 0;
  std::vector<std::uint32_t> prev(m + 1, 0);
  std::vector<std::uint32_t> cur(m + 1, 0);
  for (const Symbol x : a) {
    for (std::size_t j = 1; j <= m; ++j) {
      cur[j] = (x == b[j - 1]) ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

std::size_t lcs_len_bitparallel(SymbolSpan a, SymbolSpan b) {
  // Pack the longer string; iterate over the shorter one.
  if (a.size() < b.size()) std::swap(a, b);
  const std::size_t m = a.size();
  if (b.empty()) return 0;
  const std::size_t words = (m + 63) / 64;

  const SlotMap slots(a);
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(slots.count()) * words, 0);
  for (std::size_t i = 0; i < m; ++i) {
    masks[slots.find(a[i]) * words + i / 64] |= std::uint64_t{1} << (i % 64);
  }

  // Zero bits of v mark positions where the LCS of the processed prefix grew.
  std::vector<std::uint64_t> v(words, ~std::uint64_t{0});
  for (const Symbol c : b) {
    const std::uint32_t slot = slots.find(c);
    if (slot == kNoSlot) continue;
    const std::uint64_t* match = masks.data() + static_cast<std::size_t>(slot) * words;
    std::uint64_t carry = 0;
    for (std::size_t w = 0; w < words; ++w) {
      const std::uint64_t vw = v[w];
      const std::uint64_t u = vw & match[w];
      const std::uint64_t partial = vw + u;
      const std::uint64_t sum = partial + carry;
      carry = static_cast<std::uint64_t>(partial < vw) | static_cast<std::uint64_t>(sum < partial);
      v[w] = sum | (vw - u);
    }
  }

  std::size_t ones = 0;
  for (std::size_t w = 0; w + 1 < words; ++w) ones += std::popcount(v[w]);
  const std::size_t tail_bits = m - (words - 1) * 64;
  const std::uint64_t tail_mask =
      tail_bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << tail_bits) - 1;
  ones += std::popcount(v[words - 1] & tail_mask);
  return m - ones;
}

std::size_t lcs_len_hunt_szymanski(SymbolSpan a, SymbolSpan b) {
  if (a.size() < b.size()) std::swap(a, b);
  if (b.empty()) return 0;
  // Occurrence lists over the longer string, rows over the shorter one.
  const SlotMap slots(a);
  std::vector<std::vector<std::uint32_t>> occurrences(slots.count());
  for (std::size_t j = 0; j < a.size(); ++j) {
    occurrences[slots.find(a[j])].push_back(static_cast<std::uint32_t>(j));
  }

  // thresholds[k] = smallest end position of a common subsequence of length k+1.
  std::vector<std::uint32_t> thresholds;
  thresholds.reserve(b.size());
  for (const Symbol c : b) {
    const std::uint32_t slot = slots.find(c);
    if (slot == kNoSlot) continue;
    const auto& positions = occurrences[slot];
    for (auto it = positions.rbegin(); it != positions.rend(); ++it) {
      const auto pos = std::lower_bound(thresholds.begin(), thresholds.end(), *it);
      if (pos == thresholds.end()) {
        thresholds.push_back(*it);
      } else {
        *pos = *it;
      }
    }
  }
  return thresholds.size();
}

std::size_t lcs_len_bruteforce(SymbolSpan a, SymbolSpan b) {
  if (a.size() < b.size()) std::swap(a, b);
  const std::size_t m = b.size();
  if (m > kBruteForceLimit) {
    throw CapacityError("brute-force LCS limited to min length " +
                        std::to_string(kBruteForceLimit) + ", got " + std::to_string(m));
  }
  std::size_t best = 0;
  const std::uint64_t subsets = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    const auto count = static_cast<std::size_t>(std::popcount(mask));
    if (count <= best) continue;
    // Greedy embedding of the chosen subsequence of b into a.
    std::size_t pos = 0;
    bool embedded = true;
    for (std::size_t j = 0; j < m && embedded; ++j) {
      if ((mask >> j & 1U) == 0) continue;
      while (pos < a.size() && a[pos] != b[j]) ++pos;
      if (pos == a.size()) {
        embedded = false;
      } else {
        ++pos;
      }
    }
    if (embedded) best = count;
  }
  return best;
}

Engine choose_engine(SymbolSpan a, SymbolSpan b) {
  const std::size_t shorter = std::min(a.size(), b.size());
  if (shorter > kBitParallelMinLength) return Engine::BitParallel;
  if (shorter == 0) return Engine::Dp;
  std::unordered_map<Symbol, std::size_t> counts;
  for (const Symbol s : a) ++counts[s];
  std::size_t matches = 0;
  for (const Symbol s : b) {
    if (const auto it = counts.find(s); it != counts.end()) matches += it->second;
  }
  const double density =
      static_cast<double>(matches) / (static_cast<double>(a.size()) * static_cast<double>(b.size()));
  return density < kSparseMatchDensity ? Engine::HuntSzymanski : Engine::Dp;
}

std::size_t lcs_len(SymbolSpan a, SymbolSpan b, Engine engine) {
  if (engine == Engine::Auto) engine = choose_engine(a, b);
  switch (engine) {
    case Engine::Dp:
      return lcs_len_dp(a, b);
    case Engine::BitParallel:
      return lcs_len_bitparallel(a, b);
    case Engine::HuntSzymanski:
      return lcs_len_hunt_szymanski(a, b);
    case Engine::BruteForce:
      return lcs_len_bruteforce(a, b);
    case Engine::Auto:
      break;
  }
  return lcs_len_dp(a, b);
}

std::size_t scs_len(SymbolSpan a, SymbolSpan b, Engine engine) {
  return a.size() + b.size() - lcs_len(a, b, engine);
}

bool is_subsequence(SymbolSpan a, SymbolSpan b) noexcept {
  if (a.size() > b.size()) return false;
  std::size_t i = 0;
  for (std::size_t j = 0; j < b.size() && i < a.size(); ++j) {
    if (a[i] == b[j]) ++i;
  }
  return i == a.size();
}

std::string_view engine_name(Engine engine) noexcept {
  switch (engine) {
    case Engine::Auto: return "auto";
    case Engine::Dp: return "dp";
    case Engine::BitParallel: return "bitparallel";
    case Engine::HuntSzymanski: return "huntszymanski";
    case Engine::BruteForce: return "bruteforce";
  }
  return "auto";
}

std::optional<Engine> parse_engine(std::string_view name) noexcept {
  for (const Engine e : {Engine::Auto, Engine::Dp, Engine::BitParallel,
                         Engine::HuntSzymanski, Engine::BruteForce}) {
    if (engine_name(e) == name) return e;
  }
  return std::nullopt;
}

}  // namespace harmdist
