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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "generators.hpp"
#include "harmonic.hpp"
#include "lcs.hpp"
#include "symbols.hpp"

namespace harmdist {

// Subsets at or below this size become leaves.
inline constexpr std::size_t kLeafSize = 8;
// Prune only when the triangle bound clears the radius by this much, so
// rounding in the distance can never discard a qualifying element.
inline constexpr double kPruneMargin = 1e-9;

inline constexpr char kIndexMagic[4] = {'H', 'V', 'P', 'T'};
inline constexpr std::uint16_t kIndexVersion = 1;

struct Neighbor {
  std::size_t index = 0;
  double distance = 0.0;
  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

struct QueryStats {
  std::size_t evaluations = 0;  // distance computations
};

// Vantage-point tree over a corpus. Every corpus element sits in exactly one
// leaf; the pivot of an internal node is also stored in its inside subtree.
// Immutable after build, so concurrent queries are safe.
class VpTree {
 public:
  static constexpr std::uint32_t kNone = 0xFFFFFFFFu;

  struct Node {
    std::uint32_t pivot = 0;
    double radius = 0.0;
    std::uint32_t inside = kNone;   // d(pivot, x) <= radius
    std::uint32_t outside = kNone;  // d(pivot, x) >= radius
    std::uint32_t leaf_begin = 0;
    std::uint32_t leaf_count = 0;
    bool is_leaf() const noexcept { return inside == kNone; }
  };

  // Throws UsageError on an empty corpus.
  static VpTree build(std::vector<SymbolSeq> corpus, std::uint64_t seed,
                      const HarmonicTable& table = default_table(),
                      Engine engine = Engine::Auto);

  // Indices i with d(q, corpus[i]) <= radius, ascending.
  std::vector<std::size_t> range_query(SymbolSpan query, double radius,
                                       QueryStats* stats = nullptr) const;

  // The k nearest elements by (distance, index).
  std::vector<Neighbor> knn(SymbolSpan query, std::size_t k, QueryStats* stats = nullptr) const;

  const std::vector<SymbolSeq>& corpus() const noexcept { return corpus_; }
  std::span<const Node> nodes() const noexcept { return nodes_; }
  std::span<const std::uint32_t> leaf_items() const noexcept { return leaf_items_; }
  std::uint64_t seed() const noexcept { return seed_; }
  std::size_t depth() const;

  // Sweeps every node invariant. Returns a description of the first
  // violation, or nothing when the tree is valid.
  std::optional<std::string> validate() const;

  // Little-endian "HVPT" layout; see vptree_io.cpp.
  void save(std::ostream& out) const;
  void save(const std::filesystem::path& path) const;
  // Throws FormatError on a bad magic, version, layout, or when the file
  // was built for a different corpus; IoError when the file is unreadable.
  static VpTree load(std::istream& in, std::vector<SymbolSeq> corpus,
                     const HarmonicTable& table = default_table(),
                     Engine engine = Engine::Auto);
  static VpTree load(const std::filesystem::path& path, std::vector<SymbolSeq> corpus,
                     const HarmonicTable& table = default_table(),
                     Engine engine = Engine::Auto);

 private:
  VpTree(std::vector<SymbolSeq> corpus, std::uint64_t seed, const HarmonicTable& table,
         Engine engine)
      : corpus_(std::move(corpus)), seed_(seed), table_(&table), engine_(engine) {}

  double distance_to(SymbolSpan query, std::uint32_t index) const;
  std::uint32_t build_node(std::vector<std::uint32_t>& items, Rng& rng);

  std::vector<SymbolSeq> corpus_;
  std::vector<Node> nodes_;
  std::vector<std::uint32_t> leaf_items_;
  std::uint64_t seed_ = 0;
  const HarmonicTable* table_;
  Engine engine_;
};

// Order-sensitive digest of the corpus, stored in index files.
std::uint64_t corpus_digest(std::span<const SymbolSeq> corpus) noexcept;

// Brute-force references for the index queries.
std::vector<std::size_t> linear_range(std::span<const SymbolSeq> corpus, SymbolSpan query,
                                      double radius, const HarmonicTable& table = default_table(),
                                      Engine engine = Engine::Auto);
std::vector<Neighbor> linear_knn(std::span<const SymbolSeq> corpus, SymbolSpan query,
                                 std::size_t k, const HarmonicTable& table = default_table(),
                                 Engine engine = Engine::Auto);

struct QuerySpec {
  enum class Kind { Range, Knn } kind = Kind::Range;
  double radius = 0.0;
  std::size_t k = 1;
};

struct PruningReport {
  std::size_t corpus_size = 0;
  std::vector<std::size_t> evaluations;  // per query
  double mean_fraction_scanned = 0.0;
};

PruningReport stats(const VpTree& tree, std::span<const SymbolSeq> queries, const QuerySpec& spec);

}  // namespace harmdist
