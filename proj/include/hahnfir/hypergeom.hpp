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

#ifndef HAHNFIR_HYPERGEOM_HPP_
#define HAHNFIR_HYPERGEOM_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hahnfir/rational.hpp"
#include "hahnfir/scalar.hpp"

namespace hahnfir {

/// Terminating generalized hypergeometric series pFq(upper; lower; argument)
/// summed for k = 0..terms inclusive.
template <class Arg = Rational>
struct PFQSpec {
  std::vector<Rational> upper;
  std::vector<Rational> lower;
  Arg argument;
  std::size_t terms = 0;
};

/// Exact series coefficients prod_i (a_i)_k / (prod_j (b_j)_k k!) for
/// k = 0..terms. Throws SingularLowerParameter at the first k whose lower
/// Pochhammer product vanishes, even when the upper product already did.
std::vector<Rational> pfq_coefficients(std::span<const Rational> upper,
                                       std::span<const Rational> lower,
                                       std::size_t terms);

template <Scalar Arg>
Arg eval_pfq(const PFQSpec<Arg>& spec) {
  return horner(pfq_coefficients(spec.upper, spec.lower, spec.terms), spec.argument);
}

// ---------------------------------------------------------------------------
// Thomae-type transformations of 3F2(-n, a, b; c, d; 1).

enum class ThomaeForm {
  A1,
  A2,
  A3,
  A4,
  A5,
  A6,
  A7,
  // Typeset variants that differ from the standard identities; kept so the
  // verifier can report on them.
  A2AsPrinted,
  A5AsPrinted,
};

inline constexpr ThomaeForm kStandardThomaeForms[] = {
    ThomaeForm::A1, ThomaeForm::A2, ThomaeForm::A3, ThomaeForm::A4,
    ThomaeForm::A5, ThomaeForm::A6, ThomaeForm::A7};

inline constexpr ThomaeForm kPrintedVariantForms[] = {ThomaeForm::A2AsPrinted,
                                                      ThomaeForm::A5AsPrinted};

std::string to_string(ThomaeForm form);
/// Accepts "A1".."A7", "A2-printed", "A5-printed"; throws InvalidForm.
ThomaeForm parse_thomae_form(std::string_view tag);

struct ThomaeParams {
  std::size_t n = 0;
  Rational a, b, c, d;
};

/// The left-hand side 3F2(-n, a, b; c, d; 1).
PFQSpec<Rational> thomae_lhs(const ThomaeParams& p);

struct ThomaeRewrite {
  Rational prefactor;
  PFQSpec<Rational> spec;
};

/// Right-hand side of the chosen identity. Throws SingularLowerParameter when
/// the prefactor has a vanishing denominator.
ThomaeRewrite thomae_transform(ThomaeForm form, const ThomaeParams& p);

struct ThomaeCheck {
  bool holds = false;
  Rational lhs;
  Rational rhs;
  std::optional<std::string> skipped;  // reason, when either side is singular
};

ThomaeCheck verify_thomae(ThomaeForm form, const ThomaeParams& p);

struct ThomaeCounterexample {
  ThomaeParams params;
  Rational lhs;
  Rational rhs;
};

struct ThomaeSuiteReport {
  ThomaeForm form = ThomaeForm::A1;
  std::size_t trials = 0;
  std::size_t holds = 0;
  std::size_t skipped = 0;
  std::uint64_t seed = 0;
  std::vector<ThomaeCounterexample> counterexamples;

  bool all_hold() const { return holds == trials; }
};

/// Draws seeded random tuples (n <= 8, parameters p/q with |p| <= 9,
/// 1 <= q <= 4) until `trials` non-singular tuples have been verified.
/// Singular draws are counted in `skipped`.
ThomaeSuiteReport run_thomae_suite(ThomaeForm form, std::size_t trials, std::uint64_t seed);

}  // namespace hahnfir

#endif  // HAHNFIR_HYPERGEOM_HPP_
