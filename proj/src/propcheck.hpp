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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "generators.hpp"
#include "harmonic.hpp"
#include "lcs.hpp"
#include "symbols.hpp"

namespace harmdist::propcheck {

enum class Mode { Exhaustive, Random };
enum class Arithmetic { Rational, Float };
enum class Generator { Uniform, Correlated };

// BrokenLcs swaps the LCS length for min(|a|,|b|); it exists to prove the
// harness reports failures.
enum class Fixture { None, BrokenLcs };

enum class Property { Symmetry, Identity, Triangle, LemmaScs, LemmaChain, LemmaLcsTriangle };

std::string_view property_name(Property property) noexcept;
std::string_view mode_name(Mode mode) noexcept;
std::string_view arithmetic_name(Arithmetic arithmetic) noexcept;
std::string_view fixture_name(Fixture fixture) noexcept;
std::optional<Fixture> parse_fixture(std::string_view name) noexcept;

// True for properties of (a, b); the rest take a triple.
bool is_pair_property(Property property) noexcept;

// Float-mode tolerance on equalities (lemma suites).
inline constexpr double kEqualityTolerance = 1e-12;

struct GenConfig {
  std::size_t alphabet_size = 2;
  std::size_t max_length = 4;
  std::uint64_t sample_count = 1000;
  std::uint64_t seed = 1;
  Mode mode = Mode::Exhaustive;
  Generator generator = Generator::Uniform;
};

// Throws UsageError for a zero alphabet and CapacityError for an
// exhaustive universe above kMaxUniverse strings.
void validate(const GenConfig& config);

struct CheckOptions {
  Arithmetic arithmetic = Arithmetic::Rational;
  Fixture fixture = Fixture::None;
  Engine engine = Engine::Auto;
  unsigned workers = 1;
  // Stored counterexamples per report, smallest in canonical order first.
  std::size_t max_counterexamples = 16;
};

// Everything a property needs to know about one ordered pair.
struct PairValue {
  std::size_t len_a = 0;
  std::size_t len_b = 0;
  std::size_t lcs = 0;
  double distance = 0.0;
  std::optional<ExactHarmonic> exact;  // rational mode only
};

// The distance under test: production code, or a planted fixture.
class DistanceModel {
 public:
  explicit DistanceModel(Fixture fixture = Fixture::None, Engine engine = Engine::Auto,
                         const HarmonicTable& table = default_table())
      : fixture_(fixture), engine_(engine), table_(&table) {}

  Fixture fixture() const noexcept { return fixture_; }
  const HarmonicTable& table() const noexcept { return *table_; }

  std::size_t lcs(SymbolSpan a, SymbolSpan b) const;
  double distance(SymbolSpan a, SymbolSpan b) const;
  PairValue pair(SymbolSpan a, SymbolSpan b, Arithmetic arithmetic) const;

 private:
  Fixture fixture_;
  Engine engine_;
  const HarmonicTable* table_;
};

struct Evaluation {
  double slack = 0.0;  // negative means the property failed
  std::optional<ExactHarmonic> exact_slack;
  bool violated = false;
};

// Evaluates one property instance. Pair properties ignore c. LemmaChain
// throws std::logic_error unless a <= b <= c as subsequences.
Evaluation evaluate(Property property, Arithmetic arithmetic, const DistanceModel& model,
                    const SymbolSeq& a, const SymbolSeq& b, const SymbolSeq& c = {});

struct Counterexample {
  Property property = Property::Triangle;
  Arithmetic arithmetic = Arithmetic::Rational;
  SymbolSeq a;
  SymbolSeq b;
  SymbolSeq c;  // empty for pair properties
  double slack = 0.0;
  std::optional<ExactHarmonic> exact_slack;
};

// Canonical order: property, then a, b, c.
bool canonical_less(const Counterexample& x, const Counterexample& y);

struct PropertyStats {
  Property property = Property::Triangle;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  double min_slack = 0.0;  // meaningful when checked > 0
  std::optional<ExactHarmonic> min_exact_slack;
};

struct Report {
  std::string suite;
  Mode mode = Mode::Exhaustive;
  Arithmetic arithmetic = Arithmetic::Rational;
  Fixture fixture = Fixture::None;
  std::uint64_t seed = 0;
  std::uint64_t universe = 0;  // strings enumerated, exhaustive mode only
  std::vector<PropertyStats> properties;
  std::vector<Counterexample> counterexamples;

  std::uint64_t violations() const noexcept;
  bool passed() const noexcept { return violations() == 0; }
  const PropertyStats* find(Property property) const noexcept;
};

struct StringPair {
  SymbolSeq a;
  SymbolSeq b;
};

// Symmetry and identity over pairs, triangle over triples. Exhaustive mode
// walks every ordered pair and triple of the universe; random mode draws
// sample_count triples.
Report verify_metric_axioms(const GenConfig& config, const CheckOptions& options = {});

Report verify_lemma_scs(std::span<const StringPair> pairs, const CheckOptions& options = {});
Report verify_lemma_chain(std::span<const Chain> chains, const CheckOptions& options = {});
Report verify_lemma_lcs_triangle(std::span<const StringPair> pairs,
                                 const CheckOptions& options = {});

// Inputs for the lemma suites under a config: all ordered pairs / all
// subsequence chains of the universe, or sample_count random draws.
std::vector<StringPair> make_pairs(const GenConfig& config);
std::vector<Chain> make_chains(const GenConfig& config);

// Runs the axioms and all three lemma suites.
std::vector<Report> run_all(const GenConfig& config, const CheckOptions& options = {});

// Deletes single symbols while the violation persists. The result is
// locally minimal. Throws PreconditionError if cx is not a violation.
Counterexample shrink(const Counterexample& cx, const DistanceModel& model);

// Shrinks every stored counterexample of the report, then drops duplicates
// and restores canonical order.
void shrink_counterexamples(Report& report, const DistanceModel& model);

// "ab" for ids below 26, otherwise ids in braces.
std::string format_seq(const SymbolSeq& seq);

std::string to_text(const Report& report);
std::string to_json(const std::vector<Report>& reports);

}  // namespace harmdist::propcheck
