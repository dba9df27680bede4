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

#include "harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <string>

#include "errors.hpp"

namespace harmdist {

namespace {

// Ranges up to this many terms are summed directly by diff().
constexpr std::size_t kDirectSumSpan = 64;

}  // namespace

HarmonicTable::HarmonicTable(std::size_t capacity) {
  const std::size_t n_max = std::max(capacity, kMinTableCapacity);
  values_.resize(n_max + 1);
  values_[0] = 0.0;
  // Neumaier summation.
  double sum = 0.0;
  double carry = 0.0;
  for (std::size_t i = 1; i <= n_max; ++i) {
    const double term = 1.0 / static_cast<double>(i);
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      carry += (sum - t) + term;
    } else {
      carry += (term - t) + sum;
    }
    sum = t;
    values_[i] = sum + carry;
  }
}

double HarmonicTable::operator()(std::size_t n) const noexcept {
  if (n < values_.size()) return values_[n];
  return harmonic_asymptotic(n);
}

double HarmonicTable::diff(std::size_t lo, std::size_t hi) const {
  if (lo > hi) {
    throw PreconditionError("harmonic_diff: lo (" + std::to_string(lo) +
                            ") exceeds hi (" + std::to_string(hi) + ")");
  }
  if (hi - lo <= kDirectSumSpan && hi <= capacity()) {
    double sum = 0.0;
    for (std::size_t i = hi; i > lo; --i) sum += 1.0 / static_cast<double>(i);
    return sum;
  }
  return (*this)(hi) - (*this)(lo);
}

double harmonic_asymptotic(std::size_t n) noexcept {
  if (n == 0) return 0.0;
  const double x = static_cast<double>(n);
  const double inv2 = 1.0 / (x * x);
  return std::log(x) + kEulerMascheroni + 0.5 / x - inv2 / 12.0 +
         inv2 * inv2 / 120.0;
}

std::size_t table_capacity_from_env() {
  const char* raw = std::getenv("HARMDIST_TABLE_SIZE");
  if (raw == nullptr || *raw == '\0') return kDefaultTableCapacity;
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') return kDefaultTableCapacity;
  return static_cast<std::size_t>(parsed);
}

const HarmonicTable& default_table() {
  static const HarmonicTable table(table_capacity_from_env());
  return table;
}

ExactHarmonic::ExactHarmonic(long numerator, unsigned long denominator)
    : value_(numerator, denominator) {
  if (denominator == 0) throw PreconditionError("zero denominator");
  value_.canonicalize();
}

std::string ExactHarmonic::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

const ExactHarmonic& harmonic_exact_ref(std::size_t n) {
  if (n > kExactHarmonicLimit) {
    throw CapacityError("exact harmonic number requested for n = " +
                        std::to_string(n) + " (limit " +
                        std::to_string(kExactHarmonicLimit) + ")");
  }
  static std::mutex mutex;
  static std::deque<ExactHarmonic> cache{ExactHarmonic{}};
  std::lock_guard lock(mutex);
  while (cache.size() <= n) {
    const auto next = static_cast<unsigned long>(cache.size());
    cache.emplace_back(mpq_class(cache.back().value() + mpq_class(1, next)));
  }
  return cache[n];
}

}  // namespace harmdist
