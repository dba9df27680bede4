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

// harmdist command-line tool. Everything goes through the C API.
//
// Exit codes: 0 success, 1 usage or infeasible request, 2 I/O or encoding
// failure, 3 verification found violations.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "harmdist/harmdist.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitViolations = 3;

struct ContextDeleter {
  void operator()(harmdist_context* p) const { harmdist_context_destroy(p); }
};
struct CorpusDeleter {
  void operator()(harmdist_corpus* p) const { harmdist_corpus_destroy(p); }
};
struct IndexDeleter {
  void operator()(harmdist_index* p) const { harmdist_index_destroy(p); }
};
struct ReportDeleter {
  void operator()(harmdist_report* p) const { harmdist_report_destroy(p); }
};
using ContextPtr = std::unique_ptr<harmdist_context, ContextDeleter>;
using CorpusPtr = std::unique_ptr<harmdist_corpus, CorpusDeleter>;
using IndexPtr = std::unique_ptr<harmdist_index, IndexDeleter>;
using ReportPtr = std::unique_ptr<harmdist_report, ReportDeleter>;

// Thrown to unwind with a given exit code after the message is printed.
struct ExitError {
  int code;
};

int exit_code_for(harmdist_status status) {
  switch (status) {
    case HARMDIST_ERR_ENCODING:
    case HARMDIST_ERR_IO:
    case HARMDIST_ERR_FORMAT:
      return kExitIo;
    default:
      return kExitUsage;
  }
}

void check(harmdist_status status) {
  if (status == HARMDIST_OK) return;
  std::cerr << "harmdist: " << harmdist_status_string(status) << ": " << harmdist_last_error()
            << "\n";
  throw ExitError{exit_code_for(status)};
}

[[noreturn]] void usage_error(const std::string& message) {
  std::cerr << "harmdist: " << message << "\n";
  throw ExitError{kExitUsage};
}

struct GlobalOptions {
  std::string mode = "codepoints";
  int precision = 12;
  std::string engine = "auto";
  std::optional<std::uint64_t> seed;
};

ContextPtr make_context(const GlobalOptions& opts) {
  static const std::map<std::string, harmdist_mode> modes{
      {"bytes", HARMDIST_MODE_BYTES},
      {"codepoints", HARMDIST_MODE_CODEPOINTS},
      {"words", HARMDIST_MODE_WORDS}};
  static const std::map<std::string, harmdist_engine> engines{
      {"auto", HARMDIST_ENGINE_AUTO},
      {"dp", HARMDIST_ENGINE_DP},
      {"bitparallel", HARMDIST_ENGINE_BITPARALLEL},
      {"huntszymanski", HARMDIST_ENGINE_HUNT_SZYMANSKI},
      {"bruteforce", HARMDIST_ENGINE_BRUTEFORCE}};
  harmdist_context* raw = nullptr;
  check(harmdist_context_create(modes.at(opts.mode), engines.at(opts.engine), 0, &raw));
  return ContextPtr(raw);
}

std::string format(double value, int precision) {
  char buf[64];
  std::size_t needed = 0;
  if (harmdist_format_distance(value, precision, buf, sizeof buf, &needed) == HARMDIST_OK) {
    return buf;
  }
  std::string big(needed, '\0');
  check(harmdist_format_distance(value, precision, big.data(), big.size(), &needed));
  big.resize(needed - 1);
  return big;
}

CorpusPtr load_corpus(const harmdist_context* ctx, const std::string& path) {
  harmdist_corpus* raw = nullptr;
  check(harmdist_corpus_load(ctx, path.c_str(), &raw));
  return CorpusPtr(raw);
}

int run_dist(const GlobalOptions& opts, const std::string& a, const std::string& b) {
  const auto ctx = make_context(opts);
  double d = 0.0;
  check(harmdist_distance(ctx.get(), a.data(), a.size(), b.data(), b.size(), &d));
  std::cout << format(d, opts.precision) << "\n";
  return kExitOk;
}

int run_matrix(const GlobalOptions& opts, const std::string& path, unsigned workers) {
  const auto ctx = make_context(opts);
  const auto corpus = load_corpus(ctx.get(), path);
  const std::size_t n = harmdist_corpus_size(corpus.get());
  std::vector<double> matrix(n * n);
  check(harmdist_matrix(corpus.get(), workers, matrix.data()));

  std::string out;
  for (std::size_t j = 0; j < n; ++j) {
    if (j > 0) out += '\t';
    out += std::to_string(j);
  }
  out += '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) out += '\t';
      out += format(matrix[i * n + j], opts.precision);
    }
    out += '\n';
  }
  std::cout << out;
  return kExitOk;
}

int run_knn(const GlobalOptions& opts, const std::string& path, const std::string& query,
            std::size_t k, const std::string& index_path, bool no_index, bool show_stats) {
  const auto ctx = make_context(opts);
  const auto corpus = load_corpus(ctx.get(), path);
  const std::size_t n = harmdist_corpus_size(corpus.get());
  if (n == 0) usage_error("corpus " + path + " is empty");

  std::vector<harmdist_neighbor> found(std::min(k, n));
  std::size_t count = 0;
  std::size_t evaluations = n;
  if (no_index) {
    check(harmdist_scan_knn(corpus.get(), query.data(), query.size(), k, found.data(), &count));
  } else {
    harmdist_index* raw = nullptr;
    if (!index_path.empty()) {
      check(harmdist_index_load(corpus.get(), index_path.c_str(), &raw));
    } else {
      check(harmdist_index_build(corpus.get(), opts.seed.value_or(1), &raw));
    }
    const IndexPtr index(raw);
    check(harmdist_index_knn(index.get(), query.data(), query.size(), k, found.data(), &count,
                             &evaluations));
  }

  std::string out;
  for (std::size_t r = 0; r < count; ++r) {
    const char* text = nullptr;
    std::size_t len = 0;
    check(harmdist_corpus_item(corpus.get(), found[r].index, &text, &len));
    out += std::to_string(r + 1) + '\t' + std::to_string(found[r].index) + '\t' +
           format(found[r].distance, opts.precision) + '\t' + std::string(text, len) + '\n';
  }
  std::cout << out;
  if (show_stats) {
    std::cerr << "evaluations=" << evaluations << " corpus=" << n << "\n";
  }
  return kExitOk;
}

int run_index(const GlobalOptions& opts, const std::string& path, const std::string& out_path) {
  const auto ctx = make_context(opts);
  const auto corpus = load_corpus(ctx.get(), path);
  if (harmdist_corpus_size(corpus.get()) == 0) usage_error("corpus " + path + " is empty");
  harmdist_index* raw = nullptr;
  check(harmdist_index_build(corpus.get(), opts.seed.value_or(1), &raw));
  const IndexPtr index(raw);
  check(harmdist_index_save(index.get(), out_path.c_str()));
  return kExitOk;
}

struct CheckFlags {
  bool exhaustive = false;
  bool random = false;
  bool rational = false;
  bool floating = false;
  unsigned alphabet = 2;
  unsigned max_length = 4;
  std::uint64_t samples = 1000;
  bool correlated = false;
  unsigned workers = 0;
  bool json = false;
  std::string fixture = "none";
  std::vector<std::string> params;  // key=value overrides
};

int run_check(const GlobalOptions& opts, CheckFlags flags) {
  harmdist_check_options options;
  harmdist_check_options_init(&options);

  for (const auto& param : flags.params) {
    const auto eq = param.find('=');
    if (eq == std::string::npos) usage_error("expected key=value, got '" + param + "'");
    const std::string key = param.substr(0, eq);
    const std::string value = param.substr(eq + 1);
    std::uint64_t parsed = 0;
    try {
      std::size_t used = 0;
      parsed = std::stoull(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      usage_error("invalid number in '" + param + "'");
    }
    if (key == "alphabet") {
      flags.alphabet = static_cast<unsigned>(parsed);
    } else if (key == "maxlen") {
      flags.max_length = static_cast<unsigned>(parsed);
    } else if (key == "samples") {
      flags.samples = parsed;
    } else if (key == "seed") {
      options.seed = parsed;
    } else {
      usage_error("unknown parameter '" + key + "'");
    }
  }
  if (flags.exhaustive && flags.random) usage_error("--exhaustive and --random are exclusive");
  if (flags.rational && flags.floating) usage_error("--rational and --float are exclusive");

  options.exhaustive = flags.random ? 0 : 1;
  options.rational = flags.floating ? 0 : 1;
  options.alphabet = flags.alphabet;
  options.max_length = flags.max_length;
  options.samples = flags.samples;
  if (opts.seed) options.seed = *opts.seed;
  options.correlated = flags.correlated ? 1 : 0;
  options.workers = flags.workers;
  options.fixture_broken_lcs = flags.fixture == "broken-lcs" ? 1 : 0;
  static const std::map<std::string, harmdist_engine> engines{
      {"auto", HARMDIST_ENGINE_AUTO},
      {"dp", HARMDIST_ENGINE_DP},
      {"bitparallel", HARMDIST_ENGINE_BITPARALLEL},
      {"huntszymanski", HARMDIST_ENGINE_HUNT_SZYMANSKI},
      {"bruteforce", HARMDIST_ENGINE_BRUTEFORCE}};
  options.engine = engines.at(opts.engine);

  harmdist_report* raw = nullptr;
  check(harmdist_check_run(&options, &raw));
  const ReportPtr report(raw);
  std::cout << (flags.json ? harmdist_report_json(report.get()) : harmdist_report_text(report.get()));
  if (flags.json) std::cout << "\n";
  return harmdist_report_passed(report.get()) ? kExitOk : kExitViolations;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harmonic edit distance: distances, matrices, nearest neighbours, verification"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  app.add_option("--mode", opts.mode, "Tokenization: bytes, codepoints or words")
      ->check(CLI::IsMember({"bytes", "codepoints", "words"}));
  app.add_option("--precision", opts.precision, "Decimal places in output")
      ->check(CLI::Range(1, 17));
  app.add_option("--engine", opts.engine, "LCS engine")
      ->check(CLI::IsMember({"auto", "dp", "bitparallel", "huntszymanski", "bruteforce"}));
  app.add_option("--seed", opts.seed, "Seed for index builds and random checks");

  std::string a, b;
  auto* dist = app.add_subcommand("dist", "Distance between two strings");
  dist->add_option("a", a)->required();
  dist->add_option("b", b)->required();

  std::string matrix_path;
  unsigned matrix_workers = 0;
  auto* matrix = app.add_subcommand("matrix", "Pairwise distance matrix of a corpus as TSV");
  matrix->add_option("input", matrix_path)->required();
  matrix->add_option("--workers", matrix_workers, "Worker threads (0: all cores)");

  std::string knn_corpus, knn_query, knn_index;
  std::size_t knn_k = 1;
  bool knn_no_index = false;
  bool knn_stats = false;
  auto* knn = app.add_subcommand("knn", "k nearest corpus lines to a query");
  knn->add_option("corpus", knn_corpus)->required();
  knn->add_option("query", knn_query)->required();
  knn->add_option("-k", knn_k, "Number of neighbours")->check(CLI::PositiveNumber);
  auto* index_opt = knn->add_option("--index", knn_index, "Load a saved index instead of building");
  knn->add_flag("--no-index", knn_no_index, "Linear scan without an index")->excludes(index_opt);
  knn->add_flag("--stats", knn_stats, "Report distance evaluations on stderr");

  std::string index_corpus, index_out;
  auto* index = app.add_subcommand("index", "Build a vantage-point index and save it");
  index->add_option("corpus", index_corpus)->required();
  index->add_option("-o,--out", index_out, "Index file to write")->required();

  CheckFlags flags;
  auto* check_cmd = app.add_subcommand("check", "Verify the metric axioms and lemmas");
  check_cmd->add_flag("--exhaustive", flags.exhaustive, "Enumerate every string (default)");
  check_cmd->add_flag("--random", flags.random, "Sample random strings");
  check_cmd->add_flag("--rational", flags.rational, "Exact rational arithmetic (default)");
  check_cmd->add_flag("--float", flags.floating, "Floating-point arithmetic");
  check_cmd->add_option("--alphabet", flags.alphabet, "Alphabet size");
  check_cmd->add_option("--maxlen", flags.max_length, "Maximum string length");
  check_cmd->add_option("--samples", flags.samples, "Random samples");
  check_cmd->add_flag("--correlated", flags.correlated, "Random strings share an ancestor");
  check_cmd->add_option("--workers", flags.workers, "Worker threads (0: all cores)");
  check_cmd->add_flag("--json", flags.json, "Machine-readable summary");
  check_cmd->add_option("--fixture", flags.fixture)
      ->check(CLI::IsMember({"none", "broken-lcs"}))
      ->group("");
  check_cmd->add_option("params", flags.params, "key=value: alphabet, maxlen, samples, seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*dist) return run_dist(opts, a, b);
    if (*matrix) return run_matrix(opts, matrix_path, matrix_workers);
    if (*knn) return run_knn(opts, knn_corpus, knn_query, knn_k, knn_index, knn_no_index, knn_stats);
    if (*index) return run_index(opts, index_corpus, index_out);
    if (*check_cmd) return run_check(opts, flags);
  } catch (const ExitError& e) {
    return e.code;
  }
  return kExitUsage;
}
