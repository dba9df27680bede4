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

#include "harmdist/harmdist.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <memory>
#include <new>
#include <string>
#include <thread>
#include <vector>

#include "errors.hpp"
#include "harmonic.hpp"
#include "lcs.hpp"
#include "metric.hpp"
#include "propcheck.hpp"
#include "symbols.hpp"
#include "vptree.hpp"

using namespace harmdist;

struct harmdist_context {
  TokenMode mode = TokenMode::Codepoints;
  Engine engine = Engine::Auto;
  std::shared_ptr<const HarmonicTable> table;
};

struct harmdist_corpus {
  harmdist_context context;
  std::vector<std::string> raw;
  Interner interner;
  std::vector<SymbolSeq> seqs;
};

struct harmdist_index {
  const harmdist_corpus* corpus = nullptr;
  std::shared_ptr<const HarmonicTable> table;
  VpTree tree;
};

struct harmdist_report {
  std::vector<propcheck::Report> reports;
  std::string text;
  std::string json;
};

namespace {

thread_local std::string last_error;

harmdist_status fail(harmdist_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename Fn>
harmdist_status guarded(Fn&& fn) noexcept {
  try {
    last_error.clear();
    fn();
    return HARMDIST_OK;
  } catch (const PreconditionError& e) {
    return fail(HARMDIST_ERR_PRECONDITION, e.what());
  } catch (const CapacityError& e) {
    return fail(HARMDIST_ERR_CAPACITY, e.what());
  } catch (const UsageError& e) {
    return fail(HARMDIST_ERR_INVALID_ARGUMENT, e.what());
  } catch (const EncodingError& e) {
    return fail(HARMDIST_ERR_ENCODING, e.what());
  } catch (const IoError& e) {
    return fail(HARMDIST_ERR_IO, e.what());
  } catch (const FormatError& e) {
    return fail(HARMDIST_ERR_FORMAT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(HARMDIST_ERR_CAPACITY, "out of memory");
  } catch (const std::exception& e) {
    return fail(HARMDIST_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HARMDIST_ERR_INTERNAL, "unknown error");
  }
}

void require(bool condition, const char* message) {
  if (!condition) throw UsageError(message);
}

std::string_view text_of(const char* data, std::size_t len) {
  require(data != nullptr || len == 0, "null text with nonzero length");
  return len == 0 ? std::string_view{} : std::string_view(data, len);
}

// Both strings interned together so equal tokens share ids.
std::pair<SymbolSeq, SymbolSeq> tokenize_pair(const harmdist_context* ctx, const char* a,
                                              std::size_t a_len, const char* b,
                                              std::size_t b_len) {
  require(ctx != nullptr, "null context");
  Interner interner(ctx->mode);
  auto sa = interner.intern(text_of(a, a_len));
  auto sb = interner.intern(text_of(b, b_len));
  return {std::move(sa), std::move(sb)};
}

std::optional<TokenMode> to_mode(harmdist_mode mode) {
  switch (mode) {
    case HARMDIST_MODE_BYTES: return TokenMode::Bytes;
    case HARMDIST_MODE_CODEPOINTS: return TokenMode::Codepoints;
    case HARMDIST_MODE_WORDS: return TokenMode::Words;
  }
  return std::nullopt;
}

std::optional<Engine> to_engine(harmdist_engine engine) {
  switch (engine) {
    case HARMDIST_ENGINE_AUTO: return Engine::Auto;
    case HARMDIST_ENGINE_DP: return Engine::Dp;
    case HARMDIST_ENGINE_BITPARALLEL: return Engine::BitParallel;
    case HARMDIST_ENGINE_HUNT_SZYMANSKI: return Engine::HuntSzymanski;
    case HARMDIST_ENGINE_BRUTEFORCE: return Engine::BruteForce;
  }
  return std::nullopt;
}

harmdist_status with_buffer(char* buf, std::size_t buf_size, std::size_t* needed,
                            const std::string& s) {
  if (needed != nullptr) *needed = s.size() + 1;
  if (buf == nullptr || buf_size < s.size() + 1) {
    return fail(HARMDIST_ERR_BUFFER_TOO_SMALL,
                "buffer of " + std::to_string(buf_size) + " bytes, need " +
                    std::to_string(s.size() + 1));
  }
  std::copy(s.begin(), s.end(), buf);
  buf[s.size()] = '\0';
  return HARMDIST_OK;
}

unsigned resolve_workers(unsigned workers) {
  if (workers != 0) return workers;
  return std::max(1U, std::thread::hardware_concurrency());
}

void fill_neighbors(const std::vector<Neighbor>& found, harmdist_neighbor* out,
                    std::size_t* out_count) {
  for (std::size_t i = 0; i < found.size(); ++i) out[i] = {found[i].index, found[i].distance};
  *out_count = found.size();
}

}  // namespace

extern "C" {

const char* harmdist_version(void) { return "1.0.0"; }

const char* harmdist_status_string(harmdist_status status) {
  switch (status) {
    case HARMDIST_OK: return "ok";
    case HARMDIST_ERR_INVALID_ARGUMENT: return "invalid argument";
    case HARMDIST_ERR_PRECONDITION: return "precondition violated";
    case HARMDIST_ERR_CAPACITY: return "capacity exceeded";
    case HARMDIST_ERR_ENCODING: return "invalid encoding";
    case HARMDIST_ERR_IO: return "i/o error";
    case HARMDIST_ERR_FORMAT: return "malformed index file";
    case HARMDIST_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case HARMDIST_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* harmdist_last_error(void) { return last_error.c_str(); }

harmdist_status harmdist_context_create(harmdist_mode mode, harmdist_engine engine,
                                        size_t table_capacity, harmdist_context** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    const auto m = to_mode(mode);
    const auto e = to_engine(engine);
    require(m.has_value(), "unknown tokenization mode");
    require(e.has_value(), "unknown engine");
    auto ctx = std::make_unique<harmdist_context>();
    ctx->mode = *m;
    ctx->engine = *e;
    if (table_capacity == 0) {
      ctx->table = std::shared_ptr<const HarmonicTable>(std::shared_ptr<void>{}, &default_table());
    } else {
      ctx->table = std::make_shared<const HarmonicTable>(table_capacity);
    }
    *out = ctx.release();
  });
}

void harmdist_context_destroy(harmdist_context* ctx) { delete ctx; }

harmdist_status harmdist_distance(const harmdist_context* ctx, const char* a, size_t a_len,
                                  const char* b, size_t b_len, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    const auto [sa, sb] = tokenize_pair(ctx, a, a_len, b, b_len);
    *out = distance(sa, sb, *ctx->table, ctx->engine);
  });
}

harmdist_status harmdist_distance_decomposed(const harmdist_context* ctx, const char* a,
                                             size_t a_len, const char* b, size_t b_len,
                                             harmdist_breakdown* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    const auto [sa, sb] = tokenize_pair(ctx, a, a_len, b, b_len);
    const auto parts = distance_decomposed(sa, sb, *ctx->table, ctx->engine);
    *out = {parts.insertion_cost, parts.deletion_cost, parts.total};
  });
}

harmdist_status harmdist_distance_exact(const harmdist_context* ctx, const char* a, size_t a_len,
                                        const char* b, size_t b_len, char* buf, size_t buf_size,
                                        size_t* needed) {
  std::string rendered;
  const harmdist_status status = guarded([&] {
    const auto [sa, sb] = tokenize_pair(ctx, a, a_len, b, b_len);
    rendered = distance_exact(sa, sb, ctx->engine).str();
  });
  if (status != HARMDIST_OK) return status;
  return with_buffer(buf, buf_size, needed, rendered);
}

harmdist_status harmdist_lcs_length(const harmdist_context* ctx, const char* a, size_t a_len,
                                    const char* b, size_t b_len, size_t* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    const auto [sa, sb] = tokenize_pair(ctx, a, a_len, b, b_len);
    *out = lcs_len(sa, sb, ctx->engine);
  });
}

harmdist_status harmdist_token_count(const harmdist_context* ctx, const char* text, size_t len,
                                     size_t* out) {
  return guarded([&] {
    require(ctx != nullptr && out != nullptr, "null argument");
    *out = split_tokens(text_of(text, len), ctx->mode).size();
  });
}

harmdist_status harmdist_format_distance(double value, int precision, char* buf, size_t buf_size,
                                         size_t* needed) {
  if (precision < 1 || precision > 17) {
    return fail(HARMDIST_ERR_INVALID_ARGUMENT, "precision must be in [1, 17]");
  }
  char tmp[512];
  const int n = std::snprintf(tmp, sizeof tmp, "%.*f", precision, value);
  if (n < 0 || static_cast<std::size_t>(n) >= sizeof tmp) {
    return fail(HARMDIST_ERR_INVALID_ARGUMENT, "value out of formatting range");
  }
  return with_buffer(buf, buf_size, needed, std::string(tmp, static_cast<std::size_t>(n)));
}

harmdist_status harmdist_corpus_create(const harmdist_context* ctx, const char* const* items,
                                       const size_t* lengths, size_t count,
                                       harmdist_corpus** out) {
  return guarded([&] {
    require(ctx != nullptr && out != nullptr, "null argument");
    require(count == 0 || (items != nullptr && lengths != nullptr), "null item arrays");
    auto corpus = std::make_unique<harmdist_corpus>();
    corpus->context = *ctx;
    corpus->interner = Interner(ctx->mode);
    corpus->raw.reserve(count);
    corpus->seqs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      const auto text = text_of(items[i], lengths[i]);
      corpus->seqs.push_back(corpus->interner.intern(text));
      corpus->raw.emplace_back(text);
    }
    *out = corpus.release();
  });
}

harmdist_status harmdist_corpus_load(const harmdist_context* ctx, const char* path,
                                     harmdist_corpus** out) {
  return guarded([&] {
    require(ctx != nullptr && path != nullptr && out != nullptr, "null argument");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(std::string("cannot open ") + path);
    const std::string content((std::istreambuf_iterator<char>(in)),
                              std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError(std::string("failed reading ") + path);

    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < content.size()) {
      const std::size_t nl = content.find('\n', start);
      if (nl == std::string::npos) {
        lines.push_back(std::string_view(content).substr(start));
        break;
      }
      lines.push_back(std::string_view(content).substr(start, nl - start));
      start = nl + 1;
    }

    auto corpus = std::make_unique<harmdist_corpus>();
    corpus->context = *ctx;
    corpus->interner = Interner(ctx->mode);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      try {
        corpus->seqs.push_back(corpus->interner.intern(lines[i]));
      } catch (const EncodingError& e) {
        throw EncodingError(std::string(path) + ":" + std::to_string(i + 1) + ": " + e.what());
      }
      corpus->raw.emplace_back(lines[i]);
    }
    *out = corpus.release();
  });
}

void harmdist_corpus_destroy(harmdist_corpus* corpus) { delete corpus; }

size_t harmdist_corpus_size(const harmdist_corpus* corpus) {
  return corpus == nullptr ? 0 : corpus->seqs.size();
}

harmdist_status harmdist_corpus_item(const harmdist_corpus* corpus, size_t i, const char** data,
                                     size_t* len) {
  return guarded([&] {
    require(corpus != nullptr && data != nullptr && len != nullptr, "null argument");
    require(i < corpus->raw.size(), "corpus index out of range");
    *data = corpus->raw[i].data();
    *len = corpus->raw[i].size();
  });
}

harmdist_status harmdist_matrix(const harmdist_corpus* corpus, unsigned workers, double* out) {
  return guarded([&] {
    require(corpus != nullptr, "null corpus");
    const std::size_t n = corpus->seqs.size();
    require(n == 0 || out != nullptr, "null output matrix");
    const unsigned count = std::min<unsigned>(resolve_workers(workers),
                                              static_cast<unsigned>(std::max<std::size_t>(1, n)));
    const auto& ctx = corpus->context;
    const auto fill_rows = [&](unsigned w) {
      for (std::size_t i = w; i < n; i += count) {
        for (std::size_t j = i; j < n; ++j) {
          const double d = distance(corpus->seqs[i], corpus->seqs[j], *ctx.table, ctx.engine);
          out[i * n + j] = d;
          out[j * n + i] = d;
        }
      }
    };
    if (count <= 1) {
      fill_rows(0);
      return;
    }
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < count; ++w) threads.emplace_back(fill_rows, w);
  });
}

harmdist_status harmdist_scan_knn(const harmdist_corpus* corpus, const char* query,
                                  size_t query_len, size_t k, harmdist_neighbor* out,
                                  size_t* out_count) {
  return guarded([&] {
    require(corpus != nullptr && out_count != nullptr, "null argument");
    require(k >= 1, "k must be at least 1");
    require(out != nullptr, "null output array");
    const SymbolSeq q = corpus->interner.encode(text_of(query, query_len));
    const auto& ctx = corpus->context;
    fill_neighbors(linear_knn(corpus->seqs, q, k, *ctx.table, ctx.engine), out, out_count);
  });
}

harmdist_status harmdist_index_build(const harmdist_corpus* corpus, uint64_t seed,
                                     harmdist_index** out) {
  return guarded([&] {
    require(corpus != nullptr && out != nullptr, "null argument");
    const auto& ctx = corpus->context;
    auto tree = VpTree::build(corpus->seqs, seed, *ctx.table, ctx.engine);
    *out = new harmdist_index{corpus, ctx.table, std::move(tree)};
  });
}

harmdist_status harmdist_index_load(const harmdist_corpus* corpus, const char* path,
                                    harmdist_index** out) {
  return guarded([&] {
    require(corpus != nullptr && path != nullptr && out != nullptr, "null argument");
    const auto& ctx = corpus->context;
    auto tree = VpTree::load(std::filesystem::path(path), corpus->seqs, *ctx.table, ctx.engine);
    *out = new harmdist_index{corpus, ctx.table, std::move(tree)};
  });
}

harmdist_status harmdist_index_save(const harmdist_index* index, const char* path) {
  return guarded([&] {
    require(index != nullptr && path != nullptr, "null argument");
    index->tree.save(std::filesystem::path(path));
  });
}

void harmdist_index_destroy(harmdist_index* index) { delete index; }

harmdist_status harmdist_index_knn(const harmdist_index* index, const char* query,
                                   size_t query_len, size_t k, harmdist_neighbor* out,
                                   size_t* out_count, size_t* evaluations) {
  return guarded([&] {
    require(index != nullptr && out_count != nullptr, "null argument");
    require(k >= 1, "k must be at least 1");
    require(out != nullptr, "null output array");
    const SymbolSeq q = index->corpus->interner.encode(text_of(query, query_len));
    QueryStats stats;
    fill_neighbors(index->tree.knn(q, k, &stats), out, out_count);
    if (evaluations != nullptr) *evaluations = stats.evaluations;
  });
}

harmdist_status harmdist_index_range(const harmdist_index* index, const char* query,
                                     size_t query_len, double radius, harmdist_neighbor* out,
                                     size_t* out_count, size_t* evaluations) {
  return guarded([&] {
    require(index != nullptr && out_count != nullptr && out != nullptr, "null argument");
    require(radius >= 0.0, "radius must be non-negative");
    const SymbolSeq q = index->corpus->interner.encode(text_of(query, query_len));
    QueryStats stats;
    const auto hits = index->tree.range_query(q, radius, &stats);
    const auto& ctx = index->corpus->context;
    for (std::size_t i = 0; i < hits.size(); ++i) {
      out[i] = {hits[i], distance(q, index->corpus->seqs[hits[i]], *ctx.table, ctx.engine)};
    }
    *out_count = hits.size();
    if (evaluations != nullptr) *evaluations = stats.evaluations;
  });
}

void harmdist_check_options_init(harmdist_check_options* options) {
  if (options == nullptr) return;
  *options = harmdist_check_options{};
  options->exhaustive = 1;
  options->rational = 1;
  options->alphabet = 2;
  options->max_length = 4;
  options->samples = 1000;
  options->seed = 1;
  options->engine = HARMDIST_ENGINE_AUTO;
}

harmdist_status harmdist_check_run(const harmdist_check_options* options, harmdist_report** out) {
  return guarded([&] {
    require(options != nullptr && out != nullptr, "null argument");
    const auto engine = to_engine(options->engine);
    require(engine.has_value(), "unknown engine");

    propcheck::GenConfig config;
    config.alphabet_size = options->alphabet;
    config.max_length = options->max_length;
    config.sample_count = options->samples;
    config.seed = options->seed;
    config.mode = options->exhaustive ? propcheck::Mode::Exhaustive : propcheck::Mode::Random;
    config.generator =
        options->correlated ? propcheck::Generator::Correlated : propcheck::Generator::Uniform;

    propcheck::CheckOptions check;
    check.arithmetic =
        options->rational ? propcheck::Arithmetic::Rational : propcheck::Arithmetic::Float;
    check.fixture =
        options->fixture_broken_lcs ? propcheck::Fixture::BrokenLcs : propcheck::Fixture::None;
    check.engine = *engine;
    check.workers = resolve_workers(options->workers);

    auto report = std::make_unique<harmdist_report>();
    report->reports = propcheck::run_all(config, check);
    const propcheck::DistanceModel model(check.fixture, check.engine);
    std::uint64_t violations = 0;
    for (auto& r : report->reports) {
      propcheck::shrink_counterexamples(r, model);
      report->text += propcheck::to_text(r);
      violations += r.violations();
    }
    report->text += violations == 0 ? "result=PASS\n"
                                    : "result=FAIL violations=" + std::to_string(violations) + "\n";
    report->json = propcheck::to_json(report->reports);
    *out = report.release();
  });
}

void harmdist_report_destroy(harmdist_report* report) { delete report; }

int harmdist_report_passed(const harmdist_report* report) {
  return report != nullptr && harmdist_report_violations(report) == 0 ? 1 : 0;
}

uint64_t harmdist_report_violations(const harmdist_report* report) {
  if (report == nullptr) return 0;
  std::uint64_t total = 0;
  for (const auto& r : report->reports) total += r.violations();
  return total;
}

const char* harmdist_report_text(const harmdist_report* report) {
  return report == nullptr ? "" : report->text.c_str();
}

const char* harmdist_report_json(const harmdist_report* report) {
  return report == nullptr ? "" : report->json.c_str();
}

}  // extern "C"
