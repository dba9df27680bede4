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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace harmdist {

using Symbol = std::uint32_t;

// A string as a sequence of interned symbol ids.
class SymbolSeq {
 public:
  SymbolSeq() = default;
  explicit SymbolSeq(std::vector<Symbol> ids) : ids_(std::move(ids)) {}
  SymbolSeq(std::initializer_list<Symbol> ids) : ids_(ids) {}

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  Symbol operator[](std::size_t i) const noexcept { return ids_[i]; }
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }
  const std::vector<Symbol>& ids() const noexcept { return ids_; }
  std::span<const Symbol> span() const noexcept { return ids_; }
  operator std::span<const Symbol>() const noexcept { return ids_; }

  // Copy with the symbol at `pos` removed.
  SymbolSeq without(std::size_t pos) const;

  friend auto operator<=>(const SymbolSeq&, const SymbolSeq&) = default;
  friend bool operator==(const SymbolSeq&, const SymbolSeq&) = default;

 private:
  std::vector<Symbol> ids_;
};

// Byte values as symbol ids, no interner involved. Handy for fixtures.
SymbolSeq bytes_to_seq(std::string_view text);

enum class TokenMode { Bytes, Codepoints, Words };

// Splits text into tokens. Codepoints mode throws EncodingError on
// malformed UTF-8; words mode splits on ASCII whitespace runs.
std::vector<std::string_view> split_tokens(std::string_view text, TokenMode mode);

// Maps raw tokens to dense ids 0..alphabet_size-1. Built single-threaded;
// const member functions are safe to call concurrently afterwards.
class Interner {
 public:
  explicit Interner(TokenMode mode = TokenMode::Codepoints) : mode_(mode) {}

  TokenMode mode() const noexcept { return mode_; }
  std::size_t alphabet_size() const noexcept { return tokens_.size(); }
  std::string_view token(Symbol id) const { return tokens_.at(id); }

  // Tokenizes and interns, assigning new ids to unseen tokens.
  SymbolSeq intern(std::string_view text);

  // Tokenizes without growing the alphabet. Unseen tokens get ids at or
  // above alphabet_size(), consistent within this call only.
  SymbolSeq encode(std::string_view text) const;

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };

  TokenMode mode_;
  std::unordered_map<std::string, Symbol, Hash, std::equal_to<>> ids_;
  std::vector<std::string> tokens_;
};

}  // namespace harmdist
