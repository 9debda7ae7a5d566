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

#include "hahnfir/exactnum.hpp"

namespace hahnfir {

Rational pochhammer(const Rational& a, std::size_t k) {
  Rational result(1);
  Rational factor = a;
  for (std::size_t j = 0; j < k; ++j) {
    if (factor.is_zero()) return Rational(0);
    result *= factor;
    factor += 1;
  }
  return result;
}

Rational factorial(std::size_t k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rational(f, mpz_class(1));
}

Rational binomial(std::size_t n, std::size_t k) {
  if (k > n) return Rational(0);
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return Rational(c, mpz_class(1));
}

std::vector<Rational> bernoulli_numbers(std::size_t k) {
  std::vector<Rational> b(k + 1);
  b[0] = 1;
  for (std::size_t m = 1; m <= k; ++m) {
    Rational acc(0);
    for (std::size_t j = 0; j < m; ++j) acc += binomial(m + 1, j) * b[j];
    b[m] = -acc / Rational(static_cast<long>(m + 1));
  }
  return b;
}

Rational bernoulli_number(std::size_t k) { return bernoulli_numbers(k)[k]; }

Rational bernoulli_polynomial(std::size_t k, const Rational& x) {
  const auto b = bernoulli_numbers(k);
  Rational acc(0);
  for (std::size_t j = 0; j <= k; ++j) {
    acc += binomial(k, j) * b[j] * pow(x, static_cast<long>(k - j));
  }
  return acc;
}

}  // namespace hahnfir
