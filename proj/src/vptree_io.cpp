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

// Index file layout, all integers little-endian:
//
//   0   char[4]  magic "HVPT"
//   4   u16      version
//   6   u16      flags (0)
//   8   u64      build seed
//   16  u64      corpus size
//   24  u64      corpus digest (corpus_digest)
//   32  u64      node count
//   40  u64      leaf item count
//   48  node[node count], 32 bytes each:
//         u32 pivot, u32 inside, u32 outside, u32 leaf_begin,
//         u32 leaf_count, u32 reserved, f64 radius (IEEE-754 bits)
//   ..  u32[leaf item count] corpus indices
//
// Node 0 is the root. Child offsets are node-array indices and always point
// forward; 0xFFFFFFFF marks a leaf.

#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "errors.hpp"
#include "vptree.hpp"

namespace harmdist {

namespace {

constexpr std::size_t kHeaderSize = 48;
constexpr std::size_t kNodeSize = 32;

class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}
  void u16(std::uint16_t v) { put(v, 2); }
  void u32(std::uint32_t v) { put(v, 4); }
  void u64(std::uint64_t v) { put(v, 8); }
  void f64(double v) { put(std::bit_cast<std::uint64_t>(v), 8); }
  void raw(const char* data, std::size_t n) { out_.write(data, static_cast<std::streamsize>(n)); }

 private:
  void put(std::uint64_t v, int bytes) {
    char buf[8];
    for (int i = 0; i < bytes; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
    out_.write(buf, bytes);
  }
  std::ostream& out_;
};

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}
  std::uint16_t u16() { return static_cast<std::uint16_t>(get(2)); }
  std::uint32_t u32() { return static_cast<std::uint32_t>(get(4)); }
  std::uint64_t u64() { return get(8); }
  double f64() { return std::bit_cast<double>(get(8)); }
  void raw(char* data, std::size_t n) {
    if (!in_.read(data, static_cast<std::streamsize>(n))) throw FormatError("index file truncated");
  }
  bool at_end() { return in_.peek() == std::char_traits<char>::eof(); }

 private:
  std::uint64_t get(int bytes) {
    unsigned char buf[8];
    if (!in_.read(reinterpret_cast<char*>(buf), bytes)) throw FormatError("index file truncated");
    std::uint64_t v = 0;
    for (int i = 0; i < bytes; ++i) v |= std::uint64_t{buf[i]} << (8 * i);
    return v;
  }
  std::istream& in_;
};

}  // namespace

void VpTree::save(std::ostream& out) const {
  Writer w(out);
  w.raw(kIndexMagic, 4);
  w.u16(kIndexVersion);
  w.u16(0);
  w.u64(seed_);
  w.u64(corpus_.size());
  w.u64(corpus_digest(corpus_));
  w.u64(nodes_.size());
  w.u64(leaf_items_.size());
  for (const Node& n : nodes_) {
    w.u32(n.pivot);
    w.u32(n.inside);
    w.u32(n.outside);
    w.u32(n.leaf_begin);
    w.u32(n.leaf_count);
    w.u32(0);
    w.f64(n.radius);
  }
  for (const std::uint32_t item : leaf_items_) w.u32(item);
  if (!out) throw IoError("failed to write index");
}

void VpTree::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  save(out);
  out.close();
  if (!out) throw IoError("failed to write " + path.string());
}

VpTree VpTree::load(std::istream& in, std::vector<SymbolSeq> corpus, const HarmonicTable& table,
                    Engine engine) {
  Reader r(in);
  char magic[4];
  r.raw(magic, 4);
  if (std::memcmp(magic, kIndexMagic, 4) != 0) throw FormatError("not an HVPT index file");
  const std::uint16_t version = r.u16();
  if (version != kIndexVersion) {
    throw FormatError("unsupported index version " + std::to_string(version) + " (expected " +
                      std::to_string(kIndexVersion) + ")");
  }
  if (r.u16() != 0) throw FormatError("unknown index flags");
  const std::uint64_t seed = r.u64();
  const std::uint64_t corpus_size = r.u64();
  const std::uint64_t digest = r.u64();
  const std::uint64_t node_count = r.u64();
  const std::uint64_t item_count = r.u64();

  if (corpus_size != corpus.size() || digest != corpus_digest(corpus)) {
    throw FormatError("index was built for a different corpus");
  }
  if (node_count == 0 || node_count >= kNone || item_count != corpus_size) {
    throw FormatError("index header is inconsistent");
  }

  VpTree tree(std::move(corpus), seed, table, engine);
  tree.nodes_.resize(node_count);
  for (std::uint64_t i = 0; i < node_count; ++i) {
    Node& n = tree.nodes_[i];
    n.pivot = r.u32();
    n.inside = r.u32();
    n.outside = r.u32();
    n.leaf_begin = r.u32();
    n.leaf_count = r.u32();
    r.u32();
    n.radius = r.f64();
    if (n.is_leaf()) {
      if (n.outside != kNone || n.leaf_count == 0 ||
          std::uint64_t{n.leaf_begin} + n.leaf_count > item_count) {
        throw FormatError("malformed leaf node " + std::to_string(i));
      }
    } else if (n.inside <= i || n.outside <= i || n.inside >= node_count ||
               n.outside >= node_count || n.pivot >= corpus_size || !(n.radius >= 0.0)) {
      throw FormatError("malformed internal node " + std::to_string(i));
    }
  }
  tree.leaf_items_.resize(item_count);
  for (auto& item : tree.leaf_items_) {
    item = r.u32();
    if (item >= corpus_size) throw FormatError("leaf item out of range");
  }
  if (!r.at_end()) throw FormatError("trailing bytes after index data");

  std::vector<char> referenced(node_count, 0);
  for (const Node& n : tree.nodes_) {
    if (n.is_leaf()) continue;
    if (referenced[n.inside]++ || referenced[n.outside]++ || n.inside == n.outside) {
      throw FormatError("index node referenced more than once");
    }
  }
  std::uint64_t reachable_items = 0;
  for (std::uint64_t i = 0; i < node_count; ++i) {
    if ((i == 0) == (referenced[i] != 0)) throw FormatError("index nodes do not form a tree");
    if (tree.nodes_[i].is_leaf()) reachable_items += tree.nodes_[i].leaf_count;
  }
  if (reachable_items != item_count) throw FormatError("index leaves do not cover the corpus");

  std::vector<char> seen(corpus_size, 0);
  for (const std::uint32_t item : tree.leaf_items_) {
    if (seen[item]++) throw FormatError("corpus element listed twice in index leaves");
  }
  return tree;
}

VpTree VpTree::load(const std::filesystem::path& path, std::vector<SymbolSeq> corpus,
                    const HarmonicTable& table, Engine engine) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open index " + path.string());
  return load(in, std::move(corpus), table, engine);
}

}  // namespace harmdist
