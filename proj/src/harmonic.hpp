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
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace harmdist {

inline constexpr std::size_t kDefaultTableCapacity = std::size_t{1} << 20;
// Smallest capacity at which the asymptotic tail is within 1e-13 of H_n.
inline constexpr std::size_t kMinTableCapacity = 1024;
// Largest n for which exact rationals are produced.
inline constexpr std::size_t kExactHarmonicLimit = 10000;
// Tolerance for floating-point property checks.
inline constexpr double kTolerance = 1e-9;

inline constexpr double kEulerMascheroni = 0.57721566490153286060651209008240243;

// Prefix sums H_0..H_N of the harmonic series. Immutable after construction,
// so one table can be shared by any number of threads.
class HarmonicTable {
 public:
  // Capacities below kMinTableCapacity are raised to it.
  explicit HarmonicTable(std::size_t capacity = kDefaultTableCapacity);

  std::size_t capacity() const noexcept { return values_.size() - 1; }
  std::span<const double> values() const noexcept { return values_; }

  // H_n; falls back to the asymptotic expansion past the table.
  double operator()(std::size_t n) const noexcept;

  // H_hi - H_lo. Short in-table ranges are summed term by term to avoid
  // cancellation. Throws PreconditionError if lo > hi.
  double diff(std::size_t lo, std::size_t hi) const;

 private:
  std::vector<double> values_;
};

// ln n + gamma + 1/(2n) - 1/(12n^2) + 1/(120n^4).
double harmonic_asymptotic(std::size_t n) noexcept;

inline double harmonic(const HarmonicTable& table, std::size_t n) noexcept {
  return table(n);
}

inline double harmonic_diff(const HarmonicTable& table, std::size_t lo,
                            std::size_t hi) {
  return table.diff(lo, hi);
}

// Capacity from HARMDIST_TABLE_SIZE, or kDefaultTableCapacity when unset or
// unparsable.
std::size_t table_capacity_from_env();

// Process-wide table, built on first use with table_capacity_from_env().
const HarmonicTable& default_table();

// Exact rational in lowest terms. Used for harmonic numbers, exact
// distances and exact triangle slack.
class ExactHarmonic {
 public:
  ExactHarmonic() = default;
  explicit ExactHarmonic(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
  }
  ExactHarmonic(long numerator, unsigned long denominator);

  const mpq_class& value() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  double to_double() const { return value_.get_d(); }
  int sign() const { return sgn(value_); }
  // "num/den", always with an explicit denominator.
  std::string str() const;

  friend ExactHarmonic operator+(const ExactHarmonic& a, const ExactHarmonic& b) {
    return ExactHarmonic(mpq_class(a.value_ + b.value_));
  }
  friend ExactHarmonic operator-(const ExactHarmonic& a, const ExactHarmonic& b) {
    return ExactHarmonic(mpq_class(a.value_ - b.value_));
  }
  friend ExactHarmonic operator-(const ExactHarmonic& a) {
    return ExactHarmonic(mpq_class(-a.value_));
  }
  friend bool operator==(const ExactHarmonic& a, const ExactHarmonic& b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const ExactHarmonic& a, const ExactHarmonic& b) {
    return a.value_ < b.value_;
  }
  friend bool operator<=(const ExactHarmonic& a, const ExactHarmonic& b) {
    return a.value_ <= b.value_;
  }

 private:
  mpq_class value_{0};
};

// Exact H_n for n <= kExactHarmonicLimit; CapacityError beyond. Values are
// cached process-wide; the returned reference stays valid for the lifetime
// of the process.
const ExactHarmonic& harmonic_exact_ref(std::size_t n);

inline ExactHarmonic harmonic_exact(std::size_t n) { return harmonic_exact_ref(n); }

}  // namespace harmdist
