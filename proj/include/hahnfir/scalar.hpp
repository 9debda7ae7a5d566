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

#ifndef HAHNFIR_SCALAR_HPP_
#define HAHNFIR_SCALAR_HPP_

#include <complex>
#include <concepts>
#include <stdexcept>

#include "hahnfir/mp_complex.hpp"
#include "hahnfir/rational.hpp"

namespace hahnfir {

// Exact coefficients are produced as Rationals and then lifted into the
// scalar type of the evaluation point; `like` supplies the precision.
inline Rational lift(const Rational& q, const Rational& /*like*/) { return q; }
inline MPComplex lift(const Rational& q, const MPComplex& like) { return MPComplex(q, like.digits()); }
inline std::complex<double> lift(const Rational& q, const std::complex<double>& /*like*/) {
  return {q.to_double(), 0.0};
}
inline double lift(const Rational& q, double /*like*/) { return q.to_double(); }

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const MPComplex& x) { return x.is_zero(); }
inline bool is_zero(const std::complex<double>& x) { return x == 0.0; }
inline bool is_zero(double x) { return x == 0.0; }

/// Values an evaluation point may take: exact rationals, multiprecision
/// complex numbers, or plain double-precision values.
template <class S>
concept Scalar = requires(const S& a, const S& b, const Rational& q) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { lift(q, a) } -> std::convertible_to<S>;
  { is_zero(a) } -> std::convertible_to<bool>;
};

/// Integer power by repeated squaring; negative exponents invert.
template <Scalar S>
S pow_int(const S& base, long exponent) {
  if (exponent < 0) {
    if (is_zero(base)) throw std::domain_error("pow_int: zero to a negative power");
    return lift(Rational(1), base) / pow_int(base, -exponent);
  }
  S result = lift(Rational(1), base);
  S square = base;
  while (exponent > 0) {
    if (exponent & 1) result = result * square;
    exponent >>= 1;
    if (exponent > 0) square = square * square;
  }
  return result;
}

/// Evaluates sum_k coeffs[k] * x^k by Horner's rule.
template <Scalar S, class Coefficients>
S horner(const Coefficients& coeffs, const S& x) {
  S acc = lift(Rational(0), x);
  for (auto k = static_cast<long>(coeffs.size()) - 1; k >= 0; --k) {
    acc = acc * x + lift(coeffs[static_cast<std::size_t>(k)], x);
  }
  return acc;
}

}  // namespace hahnfir

#endif  // HAHNFIR_SCALAR_HPP_
