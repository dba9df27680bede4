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

#include "propcheck.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <utility>

#include <json.hpp>

#include "errors.hpp"
#include "metric.hpp"

namespace harmdist::propcheck {

namespace {

// Exhaustive runs precompute every ordered pair up to this universe size.
constexpr std::size_t kPairCacheLimit = 512;
// Materialized lemma inputs are capped to keep memory bounded.
constexpr std::size_t kMaxMaterialized = 10'000'000;
// Random samples per independently seeded chunk.
constexpr std::uint64_t kChunkSize = 256;

constexpr Property kAxioms[] = {Property::Symmetry, Property::Identity, Property::Triangle};

ExactHarmonic abs_exact(const ExactHarmonic& x) { return x.sign() < 0 ? -x : x; }

Evaluation from_exact(ExactHarmonic slack, bool violated) {
  Evaluation e;
  e.slack = slack.to_double();
  e.exact_slack = std::move(slack);
  e.violated = violated;
  return e;
}

Evaluation from_float(double slack, double tolerance) {
  Evaluation e;
  e.slack = slack;
  e.violated = slack < -tolerance;
  return e;
}

Evaluation eval_triangle(Arithmetic ar, const PairValue& ab, const PairValue& bc,
                         const PairValue& ac) {
  if (ar == Arithmetic::Rational) {
    auto slack = *ab.exact + *bc.exact - *ac.exact;
    const bool violated = slack.sign() < 0;
    return from_exact(std::move(slack), violated);
  }
  return from_float(ab.distance + bc.distance - ac.distance, kTolerance);
}

Evaluation eval_symmetry(Arithmetic ar, const PairValue& ab, const PairValue& ba) {
  if (ar == Arithmetic::Rational) {
    const auto diff = *ab.exact - *ba.exact;
    return from_exact(-abs_exact(diff), diff.sign() != 0);
  }
  Evaluation e;
  e.slack = -std::abs(ab.distance - ba.distance);
  e.violated = ab.distance != ba.distance;
  return e;
}

// Distinct strings are at least 1/|scs| >= 1/(|a|+|b|) apart: one of the two
// harmonic differences is non-empty and each of its terms is >= 1/|scs|.
Evaluation eval_identity(Arithmetic ar, bool equal, const PairValue& ab) {
  const std::size_t total = ab.len_a + ab.len_b;
  if (ar == Arithmetic::Rational) {
    if (equal) {
      const bool violated = ab.exact->sign() != 0;
      return from_exact(-abs_exact(*ab.exact), violated);
    }
    auto slack = *ab.exact - ExactHarmonic(1, static_cast<unsigned long>(total));
    const bool violated = slack.sign() < 0;
    return from_exact(std::move(slack), violated);
  }
  if (equal) return from_float(-std::abs(ab.distance), kTolerance);
  return from_float(ab.distance - 1.0 / static_cast<double>(total), kTolerance);
}

Evaluation eval_lemma_scs(Arithmetic ar, const PairValue& ab, const HarmonicTable& table) {
  const std::size_t scs = ab.len_a + ab.len_b - ab.lcs;
  if (ar == Arithmetic::Rational) {
    const auto& h_scs = harmonic_exact_ref(scs);
    const auto rhs = (h_scs - harmonic_exact_ref(ab.len_a)) + (h_scs - harmonic_exact_ref(ab.len_b));
    const auto diff = *ab.exact - rhs;
    return from_exact(-abs_exact(diff), diff.sign() != 0);
  }
  // Plain table differences, independent of the summation route in diff().
  const double rhs = (table(scs) - table(ab.len_a)) + (table(scs) - table(ab.len_b));
  return from_float(-std::abs(ab.distance - rhs), kEqualityTolerance);
}

Evaluation eval_lemma_lcs(Arithmetic ar, const PairValue& ab, const HarmonicTable& table) {
  if (ar == Arithmetic::Rational) {
    const auto& h_lcs = harmonic_exact_ref(ab.lcs);
    const auto rhs = (harmonic_exact_ref(ab.len_a) - h_lcs) + (harmonic_exact_ref(ab.len_b) - h_lcs);
    auto slack = rhs - *ab.exact;
    const bool violated = slack.sign() < 0;
    return from_exact(std::move(slack), violated);
  }
  const double rhs = table.diff(ab.lcs, ab.len_a) + table.diff(ab.lcs, ab.len_b);
  return from_float(rhs - ab.distance, kTolerance);
}

Evaluation eval_chain(Arithmetic ar, const PairValue& ab, const PairValue& bc,
                      const PairValue& ac) {
  if (ar == Arithmetic::Rational) {
    const auto diff = *ab.exact + *bc.exact - *ac.exact;
    return from_exact(-abs_exact(diff), diff.sign() != 0);
  }
  return from_float(-std::abs(ab.distance + bc.distance - ac.distance), kEqualityTolerance);
}

bool needs_lcs(Property p) {
  return p == Property::LemmaScs || p == Property::LemmaLcsTriangle;
}

PairValue pair_for(const DistanceModel& model, Property p, Arithmetic ar, const SymbolSeq& a,
                   const SymbolSeq& b) {
  PairValue v = model.pair(a, b, ar);
  if (needs_lcs(p) && ar == Arithmetic::Float) v.lcs = model.lcs(a, b);
  return v;
}

// Per-worker running totals.
class Accumulator {
 public:
  Accumulator(std::span<const Property> properties, Arithmetic ar, std::size_t keep)
      : arithmetic_(ar), keep_(keep) {
    for (const Property p : properties) {
      PropertyStats s;
      s.property = p;
      s.min_slack = std::numeric_limits<double>::infinity();
      stats_.push_back(s);
    }
  }

  void record(Property p, const Evaluation& e, const SymbolSeq& a, const SymbolSeq& b,
              const SymbolSeq& c) {
    PropertyStats& s = stats_for(p);
    ++s.checked;
    s.min_slack = std::min(s.min_slack, e.slack);
    if (e.exact_slack && (!s.min_exact_slack || *e.exact_slack < *s.min_exact_slack)) {
      s.min_exact_slack = e.exact_slack;
    }
    if (!e.violated) return;
    ++s.violations;
    if (keep_ == 0) return;
    Counterexample cx;
    cx.property = p;
    cx.arithmetic = arithmetic_;
    cx.a = a;
    cx.b = b;
    if (!is_pair_property(p)) cx.c = c;
    cx.slack = e.slack;
    cx.exact_slack = e.exact_slack;
    found_.push_back(std::move(cx));
    if (found_.size() > 4 * keep_) trim();
  }

  void merge(Accumulator&& other) {
    for (std::size_t i = 0; i < stats_.size(); ++i) {
      PropertyStats& s = stats_[i];
      const PropertyStats& o = other.stats_[i];
      s.checked += o.checked;
      s.violations += o.violations;
      s.min_slack = std::min(s.min_slack, o.min_slack);
      if (o.min_exact_slack && (!s.min_exact_slack || *o.min_exact_slack < *s.min_exact_slack)) {
        s.min_exact_slack = o.min_exact_slack;
      }
    }
    for (auto& cx : other.found_) found_.push_back(std::move(cx));
    trim();
  }

  void finish(Report& report) {
    trim();
    for (auto& s : stats_) {
      if (s.checked == 0) s.min_slack = 0.0;
    }
    report.properties = std::move(stats_);
    report.counterexamples = std::move(found_);
  }

 private:
  PropertyStats& stats_for(Property p) {
    for (auto& s : stats_) {
      if (s.property == p) return s;
    }
    throw std::logic_error("property not tracked by this suite");
  }

  void trim() {
    std::sort(found_.begin(), found_.end(), canonical_less);
    if (found_.size() > keep_) found_.resize(keep_);
  }

  Arithmetic arithmetic_;
  std::size_t keep_;
  std::vector<PropertyStats> stats_;
  std::vector<Counterexample> found_;
};

// Calls body(worker, accumulator) on `workers` threads and merges the
// accumulators in worker order.
template <typename Body>
void run_workers(unsigned workers, std::span<const Property> properties, Arithmetic ar,
                 std::size_t keep, Report& report, Body body) {
  workers = std::max(1U, workers);
  std::vector<Accumulator> parts(workers, Accumulator(properties, ar, keep));
  if (workers == 1) {
    body(0U, parts[0]);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> threads;
      for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
          try {
            body(w, parts[w]);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  for (unsigned w = 1; w < workers; ++w) parts[0].merge(std::move(parts[w]));
  parts[0].finish(report);
}

Report make_report(std::string suite, const CheckOptions& options) {
  Report r;
  r.suite = std::move(suite);
  r.arithmetic = options.arithmetic;
  r.fixture = options.fixture;
  return r;
}

void check_axioms_on_triple(const DistanceModel& model, Arithmetic ar, const SymbolSeq& a,
                            const SymbolSeq& b, const SymbolSeq& c, Accumulator& acc) {
  const PairValue ab = model.pair(a, b, ar);
  const PairValue bc = model.pair(b, c, ar);
  const PairValue ac = model.pair(a, c, ar);
  const PairValue ba = model.pair(b, a, ar);
  const PairValue cb = model.pair(c, b, ar);
  const PairValue ca = model.pair(c, a, ar);
  const SymbolSeq none;
  acc.record(Property::Symmetry, eval_symmetry(ar, ab, ba), a, b, none);
  acc.record(Property::Symmetry, eval_symmetry(ar, bc, cb), b, c, none);
  acc.record(Property::Symmetry, eval_symmetry(ar, ac, ca), a, c, none);
  acc.record(Property::Identity, eval_identity(ar, a == b, ab), a, b, none);
  acc.record(Property::Identity, eval_identity(ar, b == c, bc), b, c, none);
  acc.record(Property::Identity, eval_identity(ar, a == c, ac), a, c, none);
  acc.record(Property::Triangle, eval_triangle(ar, ab, bc, ac), a, b, c);
}

std::array<SymbolSeq, 3> sample_triple(Rng& rng, const GenConfig& config) {
  if (config.generator == Generator::Correlated) {
    const SymbolSeq ancestor = random_string(rng, config.alphabet_size, config.max_length);
    const std::size_t edits = std::max<std::size_t>(1, config.max_length / 8);
    return {mutate(rng, ancestor, config.alphabet_size, edits, config.max_length),
            mutate(rng, ancestor, config.alphabet_size, edits, config.max_length),
            mutate(rng, ancestor, config.alphabet_size, edits, config.max_length)};
  }
  return {random_string(rng, config.alphabet_size, config.max_length),
          random_string(rng, config.alphabet_size, config.max_length),
          random_string(rng, config.alphabet_size, config.max_length)};
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string_view property_name(Property property) noexcept {
  switch (property) {
    case Property::Symmetry: return "symmetry";
    case Property::Identity: return "identity";
    case Property::Triangle: return "triangle";
    case Property::LemmaScs: return "lemma_scs";
    case Property::LemmaChain: return "lemma_chain";
    case Property::LemmaLcsTriangle: return "lemma_lcs_triangle";
  }
  return "unknown";
}

std::string_view mode_name(Mode mode) noexcept {
  return mode == Mode::Exhaustive ? "exhaustive" : "random";
}

std::string_view arithmetic_name(Arithmetic arithmetic) noexcept {
  return arithmetic == Arithmetic::Rational ? "rational" : "float";
}

std::string_view fixture_name(Fixture fixture) noexcept {
  return fixture == Fixture::None ? "none" : "broken-lcs";
}

std::optional<Fixture> parse_fixture(std::string_view name) noexcept {
  if (name == "none") return Fixture::None;
  if (name == "broken-lcs") return Fixture::BrokenLcs;
  return std::nullopt;
}

bool is_pair_property(Property property) noexcept {
  return property != Property::Triangle && property != Property::LemmaChain;
}

void validate(const GenConfig& config) {
  if (config.alphabet_size == 0) throw UsageError("alphabet size must be positive");
  if (config.mode == Mode::Exhaustive &&
      universe_size(config.alphabet_size, config.max_length) > kMaxUniverse) {
    throw CapacityError("exhaustive universe for alphabet " +
                        std::to_string(config.alphabet_size) + " and max length " +
                        std::to_string(config.max_length) + " exceeds " +
                        std::to_string(kMaxUniverse) + " strings");
  }
}

std::size_t DistanceModel::lcs(SymbolSpan a, SymbolSpan b) const {
  if (fixture_ == Fixture::BrokenLcs) return std::min(a.size(), b.size());
  return lcs_len(a, b, engine_);
}

double DistanceModel::distance(SymbolSpan a, SymbolSpan b) const {
  if (fixture_ == Fixture::BrokenLcs) {
    return distance_from_lengths(a.size(), b.size(), lcs(a, b), *table_);
  }
  return harmdist::distance(a, b, *table_, engine_);
}

PairValue DistanceModel::pair(SymbolSpan a, SymbolSpan b, Arithmetic arithmetic) const {
  PairValue v;
  v.len_a = a.size();
  v.len_b = b.size();
  v.distance = distance(a, b);
  if (arithmetic == Arithmetic::Rational) {
    v.lcs = lcs(a, b);
    v.exact = distance_exact_from_lengths(v.len_a, v.len_b, v.lcs);
  }
  return v;
}

Evaluation evaluate(Property property, Arithmetic ar, const DistanceModel& model,
                    const SymbolSeq& a, const SymbolSeq& b, const SymbolSeq& c) {
  switch (property) {
    case Property::Symmetry:
      return eval_symmetry(ar, model.pair(a, b, ar), model.pair(b, a, ar));
    case Property::Identity:
      return eval_identity(ar, a == b, model.pair(a, b, ar));
    case Property::Triangle:
      return eval_triangle(ar, model.pair(a, b, ar), model.pair(b, c, ar), model.pair(a, c, ar));
    case Property::LemmaScs:
      return eval_lemma_scs(ar, pair_for(model, property, ar, a, b), model.table());
    case Property::LemmaLcsTriangle:
      return eval_lemma_lcs(ar, pair_for(model, property, ar, a, b), model.table());
    case Property::LemmaChain:
      if (!is_subsequence(a, b) || !is_subsequence(b, c)) {
        throw std::logic_error("lemma_chain input is not a subsequence chain");
      }
      return eval_chain(ar, model.pair(a, b, ar), model.pair(b, c, ar), model.pair(a, c, ar));
  }
  throw std::logic_error("unknown property");
}

bool canonical_less(const Counterexample& x, const Counterexample& y) {
  return std::tie(x.property, x.a, x.b, x.c) < std::tie(y.property, y.a, y.b, y.c);
}

std::uint64_t Report::violations() const noexcept {
  std::uint64_t total = 0;
  for (const auto& p : properties) total += p.violations;
  return total;
}

const PropertyStats* Report::find(Property property) const noexcept {
  for (const auto& p : properties) {
    if (p.property == property) return &p;
  }
  return nullptr;
}

Report verify_metric_axioms(const GenConfig& config, const CheckOptions& options) {
  validate(config);
  const Arithmetic ar = options.arithmetic;
  const DistanceModel model(options.fixture, options.engine);
  Report report = make_report("metric_axioms", options);
  report.mode = config.mode;
  report.seed = config.seed;

  if (config.mode == Mode::Random) {
    const std::uint64_t chunks = (config.sample_count + kChunkSize - 1) / kChunkSize;
    run_workers(options.workers, kAxioms, ar, options.max_counterexamples, report,
                [&](unsigned w, Accumulator& acc) {
                  const unsigned stride = std::max(1U, options.workers);
                  for (std::uint64_t chunk = w; chunk < chunks; chunk += stride) {
                    Rng rng(derive_seed(config.seed, chunk));
                    const std::uint64_t begin = chunk * kChunkSize;
                    const std::uint64_t end = std::min(config.sample_count, begin + kChunkSize);
                    for (std::uint64_t s = begin; s < end; ++s) {
                      const auto [a, b, c] = sample_triple(rng, config);
                      check_axioms_on_triple(model, ar, a, b, c, acc);
                    }
                  }
                });
    return report;
  }

  const auto universe = enumerate_universe(config.alphabet_size, config.max_length);
  const std::size_t n = universe.size();
  report.universe = n;

  std::vector<PairValue> cache;
  const bool cached = n <= kPairCacheLimit;
  if (cached) {
    cache.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) cache.push_back(model.pair(universe[i], universe[j], ar));
    }
  }
  const auto pair_at = [&](std::size_t i, std::size_t j) -> PairValue {
    return cached ? cache[i * n + j] : model.pair(universe[i], universe[j], ar);
  };

  run_workers(options.workers, kAxioms, ar, options.max_counterexamples, report,
              [&](unsigned w, Accumulator& acc) {
                const SymbolSeq none;
                const unsigned stride = std::max(1U, options.workers);
                for (std::size_t i = w; i < n; i += stride) {
                  for (std::size_t j = 0; j < n; ++j) {
                    const PairValue ij = pair_at(i, j);
                    acc.record(Property::Symmetry, eval_symmetry(ar, ij, pair_at(j, i)),
                               universe[i], universe[j], none);
                    acc.record(Property::Identity, eval_identity(ar, i == j, ij), universe[i],
                               universe[j], none);
                    for (std::size_t k = 0; k < n; ++k) {
                      acc.record(Property::Triangle,
                                 eval_triangle(ar, ij, pair_at(j, k), pair_at(i, k)),
                                 universe[i], universe[j], universe[k]);
                    }
                  }
                }
              });
  return report;
}

namespace {

template <typename Input, typename Eval>
Report run_input_suite(std::string suite, Property property, std::span<const Input> inputs,
                       const CheckOptions& options, Eval eval) {
  Report report = make_report(std::move(suite), options);
  const Property props[] = {property};
  const DistanceModel model(options.fixture, options.engine);
  run_workers(options.workers, props, options.arithmetic, options.max_counterexamples, report,
              [&](unsigned w, Accumulator& acc) {
                const unsigned stride = std::max(1U, options.workers);
                for (std::size_t i = w; i < inputs.size(); i += stride) eval(model, inputs[i], acc);
              });
  return report;
}

}  // namespace

Report verify_lemma_scs(std::span<const StringPair> pairs, const CheckOptions& options) {
  return run_input_suite("lemma_scs", Property::LemmaScs, pairs, options,
                         [&](const DistanceModel& model, const StringPair& p, Accumulator& acc) {
                           acc.record(Property::LemmaScs,
                                      evaluate(Property::LemmaScs, options.arithmetic, model,
                                               p.a, p.b),
                                      p.a, p.b, {});
                         });
}

Report verify_lemma_chain(std::span<const Chain> chains, const CheckOptions& options) {
  return run_input_suite("lemma_chain", Property::LemmaChain, chains, options,
                         [&](const DistanceModel& model, const Chain& ch, Accumulator& acc) {
                           acc.record(Property::LemmaChain,
                                      evaluate(Property::LemmaChain, options.arithmetic, model,
                                               ch.a, ch.b, ch.c),
                                      ch.a, ch.b, ch.c);
                         });
}

Report verify_lemma_lcs_triangle(std::span<const StringPair> pairs, const CheckOptions& options) {
  return run_input_suite(
      "lemma_lcs_triangle", Property::LemmaLcsTriangle, pairs, options,
      [&](const DistanceModel& model, const StringPair& p, Accumulator& acc) {
        acc.record(Property::LemmaLcsTriangle,
                   evaluate(Property::LemmaLcsTriangle, options.arithmetic, model, p.a, p.b),
                   p.a, p.b, {});
      });
}

std::vector<StringPair> make_pairs(const GenConfig& config) {
  validate(config);
  std::vector<StringPair> pairs;
  if (config.mode == Mode::Random) {
    Rng rng(derive_seed(config.seed, 0x5CA1AB1E));
    pairs.reserve(config.sample_count);
    for (std::uint64_t s = 0; s < config.sample_count; ++s) {
      auto [a, b, c] = sample_triple(rng, config);
      pairs.push_back({std::move(a), std::move(b)});
    }
    return pairs;
  }
  const auto universe = enumerate_universe(config.alphabet_size, config.max_length);
  if (universe.size() > kMaxMaterialized / std::max<std::size_t>(1, universe.size())) {
    throw CapacityError("too many pairs to materialize for the lemma suites");
  }
  pairs.reserve(universe.size() * universe.size());
  for (const auto& a : universe) {
    for (const auto& b : universe) pairs.push_back({a, b});
  }
  return pairs;
}

std::vector<Chain> make_chains(const GenConfig& config) {
  validate(config);
  std::vector<Chain> chains;
  if (config.mode == Mode::Random) {
    Rng rng(derive_seed(config.seed, 0xC4A1));
    chains.reserve(config.sample_count);
    for (std::uint64_t s = 0; s < config.sample_count; ++s) {
      chains.push_back(random_chain(rng, config.alphabet_size, config.max_length));
    }
    return chains;
  }
  const auto universe = enumerate_universe(config.alphabet_size, config.max_length);
  for (const auto& b : universe) {
    for (const auto& a : universe) {
      if (!is_subsequence(a, b)) continue;
      for (const auto& c : universe) {
        if (!is_subsequence(b, c)) continue;
        if (chains.size() >= kMaxMaterialized) {
          throw CapacityError("too many chains to materialize for the lemma suite");
        }
        chains.push_back({a, b, c});
      }
    }
  }
  return chains;
}

std::vector<Report> run_all(const GenConfig& config, const CheckOptions& options) {
  validate(config);
  std::vector<Report> reports;
  reports.push_back(verify_metric_axioms(config, options));
  const auto pairs = make_pairs(config);
  const auto chains = make_chains(config);
  reports.push_back(verify_lemma_scs(pairs, options));
  reports.push_back(verify_lemma_chain(chains, options));
  reports.push_back(verify_lemma_lcs_triangle(pairs, options));
  const std::uint64_t universe =
      config.mode == Mode::Exhaustive ? universe_size(config.alphabet_size, config.max_length) : 0;
  for (auto& r : reports) {
    r.mode = config.mode;
    r.seed = config.seed;
    r.universe = universe;
  }
  return reports;
}

Counterexample shrink(const Counterexample& cx, const DistanceModel& model) {
  const auto violation = [&](const SymbolSeq& a, const SymbolSeq& b,
                             const SymbolSeq& c) -> std::optional<Evaluation> {
    try {
      auto e = evaluate(cx.property, cx.arithmetic, model, a, b, c);
      if (e.violated) return e;
    } catch (const std::logic_error&) {
      // Deletion broke the chain precondition; not a smaller witness.
    }
    return std::nullopt;
  };

  auto first = violation(cx.a, cx.b, cx.c);
  if (!first) throw PreconditionError("shrink: input is not a violation of its property");

  Counterexample cur = cx;
  cur.slack = first->slack;
  cur.exact_slack = first->exact_slack;
  const int arity = is_pair_property(cx.property) ? 2 : 3;

  bool progress = true;
  while (progress) {
    progress = false;
    for (int slot = 0; slot < arity && !progress; ++slot) {
      const SymbolSeq& target = slot == 0 ? cur.a : slot == 1 ? cur.b : cur.c;
      for (std::size_t pos = 0; pos < target.size(); ++pos) {
        std::array<SymbolSeq, 3> next{cur.a, cur.b, cur.c};
        next[slot] = target.without(pos);
        if (auto e = violation(next[0], next[1], next[2])) {
          cur.a = std::move(next[0]);
          cur.b = std::move(next[1]);
          cur.c = std::move(next[2]);
          cur.slack = e->slack;
          cur.exact_slack = e->exact_slack;
          progress = true;
          break;
        }
      }
    }
  }
  return cur;
}

void shrink_counterexamples(Report& report, const DistanceModel& model) {
  for (auto& cx : report.counterexamples) cx = shrink(cx, model);
  auto& list = report.counterexamples;
  std::sort(list.begin(), list.end(), canonical_less);
  const auto same = [](const Counterexample& x, const Counterexample& y) {
    return !canonical_less(x, y) && !canonical_less(y, x);
  };
  list.erase(std::unique(list.begin(), list.end(), same), list.end());
}

std::string format_seq(const SymbolSeq& seq) {
  std::string out = "\"";
  for (const Symbol s : seq) {
    if (s < 26) {
      out.push_back(static_cast<char>('a' + s));
    } else {
      out += "{" + std::to_string(s) + "}";
    }
  }
  out.push_back('"');
  return out;
}

std::string to_text(const Report& report) {
  std::string out = "suite=" + report.suite + " mode=" + std::string(mode_name(report.mode)) +
                    " arithmetic=" + std::string(arithmetic_name(report.arithmetic)) +
                    " fixture=" + std::string(fixture_name(report.fixture)) +
                    " seed=" + std::to_string(report.seed);
  if (report.mode == Mode::Exhaustive) out += " universe=" + std::to_string(report.universe);
  out += "\n";
  for (const auto& p : report.properties) {
    out += "  property=" + std::string(property_name(p.property)) +
           " checked=" + std::to_string(p.checked) + " violations=" + std::to_string(p.violations) +
           " min_slack=" + format_double(p.min_slack);
    if (p.min_exact_slack) out += " min_exact_slack=" + p.min_exact_slack->str();
    out += "\n";
  }
  for (const auto& cx : report.counterexamples) {
    out += "  counterexample property=" + std::string(property_name(cx.property)) +
           " a=" + format_seq(cx.a) + " b=" + format_seq(cx.b);
    if (!is_pair_property(cx.property)) out += " c=" + format_seq(cx.c);
    out += " slack=" + format_double(cx.slack);
    if (cx.exact_slack) out += " exact_slack=" + cx.exact_slack->str();
    out += "\n";
  }
  return out;
}

std::string to_json(const std::vector<Report>& reports) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json jr;
    jr["suite"] = r.suite;
    jr["mode"] = mode_name(r.mode);
    jr["arithmetic"] = arithmetic_name(r.arithmetic);
    jr["fixture"] = fixture_name(r.fixture);
    jr["seed"] = r.seed;
    if (r.mode == Mode::Exhaustive) jr["universe"] = r.universe;
    jr["passed"] = r.passed();
    jr["properties"] = nlohmann::ordered_json::array();
    for (const auto& p : r.properties) {
      nlohmann::ordered_json jp;
      jp["property"] = property_name(p.property);
      jp["checked"] = p.checked;
      jp["violations"] = p.violations;
      jp["min_slack"] = p.min_slack;
      if (p.min_exact_slack) jp["min_exact_slack"] = p.min_exact_slack->str();
      jr["properties"].push_back(std::move(jp));
    }
    jr["counterexamples"] = nlohmann::ordered_json::array();
    for (const auto& cx : r.counterexamples) {
      nlohmann::ordered_json jc;
      jc["property"] = property_name(cx.property);
      jc["a"] = cx.a.ids();
      jc["b"] = cx.b.ids();
      if (!is_pair_property(cx.property)) jc["c"] = cx.c.ids();
      jc["slack"] = cx.slack;
      if (cx.exact_slack) jc["exact_slack"] = cx.exact_slack->str();
      jr["counterexamples"].push_back(std::move(jc));
    }
    doc.push_back(std::move(jr));
  }
  return doc.dump(2);
}

}  // namespace harmdist::propcheck
