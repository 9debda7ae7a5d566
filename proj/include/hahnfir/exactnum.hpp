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

#ifndef HAHNFIR_EXACTNUM_HPP_
#define HAHNFIR_EXACTNUM_HPP_

#include <cstddef>
#include <vector>

#include "hahnfir/rational.hpp"

namespace hahnfir {

/// Rising factorial a(a+1)...(a+k-1); 1 for k = 0. Negative-integer `a`
/// yields the literal finite product, which may be zero.
Rational pochhammer(const Rational& a, std::size_t k);

Rational factorial(std::size_t k);
Rational binomial(std::size_t n, std::size_t k);

/// Bernoulli numbers B_0..B_k with B_1 = -1/2, from the recurrence
/// sum_{j=0}^{k} C(k+1, j) B_j = 0.
std::vector<Rational> bernoulli_numbers(std::size_t k);
Rational bernoulli_number(std::size_t k);

/// B_k(x) = sum_{j=0}^{k} C(k, j) B_j x^{k-j}.
Rational bernoulli_polynomial(std::size_t k, const Rational& x);

}  // namespace hahnfir

#endif  // HAHNFIR_EXACTNUM_HPP_
