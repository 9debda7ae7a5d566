// Copyright 2026 The hahnfir Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HAHNFIR_IDENTITY_SUITE_HPP_
#define HAHNFIR_IDENTITY_SUITE_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hahnfir/rational.hpp"

namespace hahnfir {

/// Values substituted into catalog expressions.
struct Bindings {
  Rational n, x, alpha, beta, N;
};

/// c0 + c1 n + c2 x + c3 alpha + c4 beta + c5 N.
class AffineExpr {
 public:
  AffineExpr() = default;

  /// Accepts sums of integer constants, variables (n, x, alpha, beta, N) and
  /// `k*var` terms, e.g. "-2*n-alpha-beta-1". Throws InvalidForm.
  static AffineExpr parse(std::string_view text);

  Rational eval(const Bindings& b) const;
  const std::string& text() const noexcept { return text_; }

  friend bool operator==(const AffineExpr& a, const AffineExpr& b) { return a.coeff_ == b.coeff_; }

 private:
  std::array<Rational, 6> coeff_{};
  std::string text_;
};

/// (-1)^n (if alternating) prod (num_i)_n / prod (den_j)_n.
struct Prefactor {
  bool alternating = false;
  std::vector<AffineExpr> numerator;
  std::vector<AffineExpr> denominator;
};

/// Q_n(argument; alpha, beta, N) with remapped expressions.
struct HahnTarget {
  AffineExpr argument, alpha, beta, N;
};

struct TransformRecord {
  /// Printed records are "1".."32" in listing order; conjecture records carry
  /// a descriptive suffix.
  std::string id;
  Prefactor prefactor;
  HahnTarget target;
  std::string source_note;
  bool conjecture = false;
};

/// The listing as printed, in order, followed by labelled conjecture records.
const std::vector<TransformRecord>& catalog();
/// Only the printed records.
std::vector<TransformRecord> printed_catalog();

struct TransformCheck {
  bool holds = false;
  Rational lhs;
  Rational rhs;
  std::optional<std::string> skipped;
};

/// Exact comparison of Q_n(x; alpha, beta, N) against prefactor * Q_n(target).
/// Inevaluable sides become skips.
TransformCheck verify_transform(const TransformRecord& rec, std::size_t n, const Rational& x,
                                const Rational& alpha, const Rational& beta, const Rational& N);

struct Counterexample {
  std::size_t n = 0;
  Rational x, alpha, beta, N, lhs, rhs;
};

struct RecordReport {
  std::string id;
  bool conjecture = false;
  std::size_t holds = 0;
  std::size_t fails = 0;
  std::size_t skips = 0;
  /// All evaluable degree-0 probes held.
  bool degree_zero_holds = true;
  std::optional<Counterexample> first_counterexample;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::size_t trials_per_record = 0;
  std::size_t printed_records = 0;
  std::size_t distinct_printed_records = 0;
  std::vector<RecordReport> records;

  std::size_t failing_printed_records() const;
  bool degree_zero_holds() const;
};

/// Seeded random tuples with n <= 4 and integer parameters in [-8, 8].
/// Requires trials_per_record >= 20 (std::invalid_argument otherwise).
SuiteReport run_suite(std::size_t trials_per_record, std::uint64_t seed);

/// One step of the chain that identifies the Shmaliy polynomial with a Hahn
/// polynomial, checked exactly against the direct taps over n = 0..N-1.
struct ChainCheck {
  std::string name;
  std::string formula;
  bool printed = true;
  bool holds = false;
  std::size_t checked = 0;
  /// First (m, N, n) where the form disagrees with the taps.
  std::optional<std::array<std::size_t, 3>> first_mismatch;
  Rational expected;
  Rational got;
};

/// Checks every form for 1 <= m <= max_order, m+2 <= N <= max_window.
std::vector<ChainCheck> identification_chain(std::size_t max_order, std::size_t max_window);

}  // namespace hahnfir

#endif  // HAHNFIR_IDENTITY_SUITE_HPP_
