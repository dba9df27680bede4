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

#include "symbols.hpp"

#include <string>

#include "errors.hpp"

namespace harmdist {

namespace {

bool is_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\v' || c == '\f' || c == '\r';
}

// Length of the UTF-8 scalar value starting at text[pos], or 0 if the bytes
// there are not a well-formed encoding.
std::size_t utf8_sequence_length(std::string_view text, std::size_t pos) {
  const auto byte = [&](std::size_t i) {
    return static_cast<unsigned char>(text[pos + i]);
  };
  const std::size_t left = text.size() - pos;
  const unsigned char b0 = byte(0);
  if (b0 < 0x80) return 1;

  std::size_t len = 0;
  unsigned char lo = 0x80;
  unsigned char hi = 0xBF;
  if (b0 >= 0xC2 && b0 <= 0xDF) {
    len = 2;
  } else if (b0 >= 0xE0 && b0 <= 0xEF) {
    len = 3;
    if (b0 == 0xE0) lo = 0xA0;        // overlong
    if (b0 == 0xED) hi = 0x9F;        // surrogates
  } else if (b0 >= 0xF0 && b0 <= 0xF4) {
    len = 4;
    if (b0 == 0xF0) lo = 0x90;        // overlong
    if (b0 == 0xF4) hi = 0x8F;        // > U+10FFFF
  } else {
    return 0;
  }
  if (left < len) return 0;
  if (byte(1) < lo || byte(1) > hi) return 0;
  for (std::size_t i = 2; i < len; ++i) {
    if (byte(i) < 0x80 || byte(i) > 0xBF) return 0;
  }
  return len;
}

}  // namespace

SymbolSeq SymbolSeq::without(std::size_t pos) const {
  std::vector<Symbol> out;
  out.reserve(ids_.size() > 0 ? ids_.size() - 1 : 0);
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (i != pos) out.push_back(ids_[i]);
  }
  return SymbolSeq(std::move(out));
}

SymbolSeq bytes_to_seq(std::string_view text) {
  std::vector<Symbol> ids;
  ids.reserve(text.size());
  for (const char c : text) ids.push_back(static_cast<unsigned char>(c));
  return SymbolSeq(std::move(ids));
}

std::vector<std::string_view> split_tokens(std::string_view text, TokenMode mode) {
  std::vector<std::string_view> tokens;
  switch (mode) {
    case TokenMode::Bytes:
      tokens.reserve(text.size());
      for (std::size_t i = 0; i < text.size(); ++i) tokens.push_back(text.substr(i, 1));
      break;
    case TokenMode::Codepoints:
      tokens.reserve(text.size());
      for (std::size_t i = 0; i < text.size();) {
        const std::size_t len = utf8_sequence_length(text, i);
        if (len == 0) {
          throw EncodingError("invalid UTF-8 at byte offset " + std::to_string(i));
        }
        tokens.push_back(text.substr(i, len));
        i += len;
      }
      break;
    case TokenMode::Words: {
      std::size_t i = 0;
      while (i < text.size()) {
        while (i < text.size() && is_space(static_cast<unsigned char>(text[i]))) ++i;
        const std::size_t start = i;
        while (i < text.size() && !is_space(static_cast<unsigned char>(text[i]))) ++i;
        if (i > start) tokens.push_back(text.substr(start, i - start));
      }
      break;
    }
  }
  return tokens;
}

SymbolSeq Interner::intern(std::string_view text) {
  const auto tokens = split_tokens(text, mode_);
  std::vector<Symbol> ids;
  ids.reserve(tokens.size());
  for (const auto tok : tokens) {
    auto it = ids_.find(tok);
    if (it == ids_.end()) {
      const auto id = static_cast<Symbol>(tokens_.size());
      tokens_.emplace_back(tok);
      it = ids_.emplace(std::string(tok), id).first;
    }
    ids.push_back(it->second);
  }
  return SymbolSeq(std::move(ids));
}

SymbolSeq Interner::encode(std::string_view text) const {
  const auto tokens = split_tokens(text, mode_);
  std::unordered_map<std::string_view, Symbol> unseen;
  std::vector<Symbol> ids;
  ids.reserve(tokens.size());
  for (const auto tok : tokens) {
    if (auto it = ids_.find(tok); it != ids_.end()) {
      ids.push_back(it->second);
      continue;
    }
    const auto fresh = static_cast<Symbol>(tokens_.size() + unseen.size());
    ids.push_back(unseen.try_emplace(tok, fresh).first->second);
  }
  return SymbolSeq(std::move(ids));
}

}  // namespace harmdist
