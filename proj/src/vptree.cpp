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

#include "vptree.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>
#include <tuple>
#include <utility>

#include "errors.hpp"
#include "metric.hpp"

namespace harmdist {

namespace {

bool neighbor_less(const Neighbor& x, const Neighbor& y) {
  return std::tie(x.distance, x.index) < std::tie(y.distance, y.index);
}

// Distances to ancestor pivots already computed on the current path, so no
// element is evaluated twice within one query.
class PathMemo {
 public:
  void push(std::uint32_t index, double d) { entries_.emplace_back(index, d); }
  void pop() { entries_.pop_back(); }
  std::optional<double> find(std::uint32_t index) const {
    for (const auto& [i, d] : entries_) {
      if (i == index) return d;
    }
    return std::nullopt;
  }

 private:
  std::vector<std::pair<std::uint32_t, double>> entries_;
};

}  // namespace

VpTree VpTree::build(std::vector<SymbolSeq> corpus, std::uint64_t seed,
                     const HarmonicTable& table, Engine engine) {
  if (corpus.empty()) throw UsageError("cannot build an index over an empty corpus");
  if (corpus.size() >= kNone) throw CapacityError("corpus too large for the index");
  VpTree tree(std::move(corpus), seed, table, engine);
  std::vector<std::uint32_t> items(tree.corpus_.size());
  for (std::size_t i = 0; i < items.size(); ++i) items[i] = static_cast<std::uint32_t>(i);
  Rng rng(seed);
  tree.build_node(items, rng);
  return tree;
}

double VpTree::distance_to(SymbolSpan query, std::uint32_t index) const {
  return distance(query, corpus_[index], *table_, engine_);
}

std::uint32_t VpTree::build_node(std::vector<std::uint32_t>& items, Rng& rng) {
  const auto self = static_cast<std::uint32_t>(nodes_.size());
  nodes_.emplace_back();
  if (items.size() <= kLeafSize) {
    std::sort(items.begin(), items.end());
    nodes_[self].leaf_begin = static_cast<std::uint32_t>(leaf_items_.size());
    nodes_[self].leaf_count = static_cast<std::uint32_t>(items.size());
    leaf_items_.insert(leaf_items_.end(), items.begin(), items.end());
    return self;
  }

  const std::size_t pick = rng.below(items.size());
  const std::uint32_t pivot = items[pick];
  std::vector<std::pair<double, std::uint32_t>> others;
  others.reserve(items.size() - 1);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != pick) others.emplace_back(distance_to(corpus_[pivot], items[i]), items[i]);
  }
  std::sort(others.begin(), others.end());
  const std::size_t median = (others.size() - 1) / 2;

  std::vector<std::uint32_t> inside{pivot};
  std::vector<std::uint32_t> outside;
  for (std::size_t i = 0; i < others.size(); ++i) {
    (i <= median ? inside : outside).push_back(others[i].second);
  }
  items.clear();
  items.shrink_to_fit();

  nodes_[self].pivot = pivot;
  nodes_[self].radius = others[median].first;
  const std::uint32_t in = build_node(inside, rng);
  const std::uint32_t out = build_node(outside, rng);
  nodes_[self].inside = in;
  nodes_[self].outside = out;
  return self;
}

std::vector<std::size_t> VpTree::range_query(SymbolSpan query, double radius,
                                             QueryStats* stats) const {
  if (!(radius >= 0.0)) throw PreconditionError("range_query radius must be non-negative");
  std::vector<std::size_t> hits;
  PathMemo memo;
  std::size_t evaluations = 0;
  // A pivot can be chosen again below its own node, so consult the memo.
  const auto pivot_distance = [&](std::uint32_t pivot) {
    double d = 0.0;
    if (const auto known = memo.find(pivot)) {
      d = *known;
    } else {
      d = distance_to(query, pivot);
      ++evaluations;
    }
    memo.push(pivot, d);
    return d;
  };

  const auto visit = [&](auto&& self, std::uint32_t id) -> void {
    const Node& node = nodes_[id];
    if (node.is_leaf()) {
      for (std::uint32_t k = 0; k < node.leaf_count; ++k) {
        const std::uint32_t item = leaf_items_[node.leaf_begin + k];
        double d = 0.0;
        if (const auto known = memo.find(item)) {
          d = *known;
        } else {
          d = distance_to(query, item);
          ++evaluations;
        }
        if (d <= radius) hits.push_back(item);
      }
      return;
    }
    const double d = pivot_distance(node.pivot);
    if (!(d - radius > node.radius + kPruneMargin)) self(self, node.inside);
    if (!(d + radius < node.radius - kPruneMargin)) self(self, node.outside);
    memo.pop();
  };
  visit(visit, 0);

  std::sort(hits.begin(), hits.end());
  if (stats != nullptr) stats->evaluations = evaluations;
  return hits;
}

std::vector<Neighbor> VpTree::knn(SymbolSpan query, std::size_t k, QueryStats* stats) const {
  if (k == 0) throw PreconditionError("knn requires k >= 1");
  const auto worse = [](const Neighbor& x, const Neighbor& y) { return neighbor_less(x, y); };
  // Max-heap on (distance, index): top is the current k-th best.
  std::priority_queue<Neighbor, std::vector<Neighbor>, decltype(worse)> best(worse);
  PathMemo memo;
  std::size_t evaluations = 0;
  // A pivot can be chosen again below its own node, so consult the memo.
  const auto pivot_distance = [&](std::uint32_t pivot) {
    double d = 0.0;
    if (const auto known = memo.find(pivot)) {
      d = *known;
    } else {
      d = distance_to(query, pivot);
      ++evaluations;
    }
    memo.push(pivot, d);
    return d;
  };

  const auto tau = [&] {
    return best.size() < k ? std::numeric_limits<double>::infinity() : best.top().distance;
  };
  const auto offer = [&](std::uint32_t item, double d) {
    const Neighbor candidate{item, d};
    if (best.size() < k) {
      best.push(candidate);
    } else if (neighbor_less(candidate, best.top())) {
      best.pop();
      best.push(candidate);
    }
  };

  const auto visit = [&](auto&& self, std::uint32_t id) -> void {
    const Node& node = nodes_[id];
    if (node.is_leaf()) {
      for (std::uint32_t j = 0; j < node.leaf_count; ++j) {
        const std::uint32_t item = leaf_items_[node.leaf_begin + j];
        if (const auto known = memo.find(item)) {
          offer(item, *known);
        } else {
          offer(item, distance_to(query, item));
          ++evaluations;
        }
      }
      return;
    }
    const double d = pivot_distance(node.pivot);
    const auto try_inside = [&] {
      if (!(d - tau() > node.radius + kPruneMargin)) self(self, node.inside);
    };
    const auto try_outside = [&] {
      if (!(d + tau() < node.radius - kPruneMargin)) self(self, node.outside);
    };
    if (d <= node.radius) {
      try_inside();
      try_outside();
    } else {
      try_outside();
      try_inside();
    }
    memo.pop();
  };
  visit(visit, 0);

  std::vector<Neighbor> out;
  out.reserve(best.size());
  while (!best.empty()) {
    out.push_back(best.top());
    best.pop();
  }
  std::reverse(out.begin(), out.end());
  if (stats != nullptr) stats->evaluations = evaluations;
  return out;
}

std::size_t VpTree::depth() const {
  const auto walk = [&](auto&& self, std::uint32_t id) -> std::size_t {
    const Node& node = nodes_[id];
    if (node.is_leaf()) return 1;
    return 1 + std::max(self(self, node.inside), self(self, node.outside));
  };
  return walk(walk, 0);
}

std::optional<std::string> VpTree::validate() const {
  if (nodes_.empty()) return "tree has no nodes";
  std::vector<int> seen(corpus_.size(), 0);
  for (const std::uint32_t item : leaf_items_) {
    if (item >= corpus_.size()) return "leaf item out of range";
    ++seen[item];
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i] != 1) {
      return "corpus element " + std::to_string(i) + " appears " + std::to_string(seen[i]) +
             " times in leaves";
    }
  }

  // Members of each subtree, checked against every ancestor split.
  std::optional<std::string> failure;
  const auto members = [&](auto&& self, std::uint32_t id) -> std::vector<std::uint32_t> {
    const Node& node = nodes_[id];
    if (node.is_leaf()) {
      return {leaf_items_.begin() + node.leaf_begin,
              leaf_items_.begin() + node.leaf_begin + node.leaf_count};
    }
    auto in = self(self, node.inside);
    auto out = self(self, node.outside);
    if (failure) return {};
    const SymbolSeq& pivot = corpus_[node.pivot];
    for (const std::uint32_t x : in) {
      if (distance(pivot, corpus_[x], *table_, engine_) > node.radius) {
        failure = "node " + std::to_string(id) + ": inside element " + std::to_string(x) +
                  " beyond radius";
        return {};
      }
    }
    for (const std::uint32_t x : out) {
      if (distance(pivot, corpus_[x], *table_, engine_) < node.radius) {
        failure = "node " + std::to_string(id) + ": outside element " + std::to_string(x) +
                  " within radius";
        return {};
      }
    }
    in.insert(in.end(), out.begin(), out.end());
    return in;
  };
  members(members, 0);
  return failure;
}

std::uint64_t corpus_digest(std::span<const SymbolSeq> corpus) noexcept {
  // FNV-1a over lengths and ids, little-endian.
  std::uint64_t h = 0xCBF29CE484222325ULL;
  const auto mix = [&h](std::uint64_t value, int bytes) {
    for (int i = 0; i < bytes; ++i) {
      h ^= (value >> (8 * i)) & 0xFF;
      h *= 0x100000001B3ULL;
    }
  };
  mix(corpus.size(), 8);
  for (const auto& s : corpus) {
    mix(s.size(), 8);
    for (const Symbol id : s) mix(id, 4);
  }
  return h;
}

std::vector<std::size_t> linear_range(std::span<const SymbolSeq> corpus, SymbolSpan query,
                                      double radius, const HarmonicTable& table, Engine engine) {
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (distance(query, corpus[i], table, engine) <= radius) hits.push_back(i);
  }
  return hits;
}

std::vector<Neighbor> linear_knn(std::span<const SymbolSeq> corpus, SymbolSpan query,
                                 std::size_t k, const HarmonicTable& table, Engine engine) {
  std::vector<Neighbor> all;
  all.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    all.push_back({i, distance(query, corpus[i], table, engine)});
  }
  std::sort(all.begin(), all.end(), neighbor_less);
  if (all.size() > k) all.resize(k);
  return all;
}

PruningReport stats(const VpTree& tree, std::span<const SymbolSeq> queries, const QuerySpec& spec) {
  PruningReport report;
  report.corpus_size = tree.corpus().size();
  double total = 0.0;
  for (const auto& q : queries) {
    QueryStats s;
    if (spec.kind == QuerySpec::Kind::Range) {
      tree.range_query(q, spec.radius, &s);
    } else {
      tree.knn(q, spec.k, &s);
    }
    report.evaluations.push_back(s.evaluations);
    total += static_cast<double>(s.evaluations) / static_cast<double>(report.corpus_size);
  }
  report.mean_fraction_scanned = queries.empty() ? 0.0 : total / static_cast<double>(queries.size());
  return report;
}

}  // namespace harmdist
