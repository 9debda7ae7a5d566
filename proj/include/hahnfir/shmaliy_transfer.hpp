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

#ifndef HAHNFIR_SHMALIY_TRANSFER_HPP_
#define HAHNFIR_SHMALIY_TRANSFER_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "hahnfir/errors.hpp"
#include "hahnfir/mp_complex.hpp"
#include "hahnfir/scalar.hpp"
#include "hahnfir/shmaliy.hpp"

namespace hahnfir {

/// H(z) = sum_{n=0}^{N-1} taps[n] z^{-n}, by Horner's rule in 1/z. Exact
/// for rational z. Throws ZeroArgument at z = 0.
template <Scalar S>
S transfer_direct(const CoefficientVector& coeffs, const S& z) {
  if (is_zero(z)) throw ZeroArgument();
  const S inverse = lift(Rational(1), z) / z;
  return horner(coeffs.taps, inverse);
}

template <Scalar S>
S transfer_direct(std::size_t m, std::size_t N, const S& z) {
  return transfer_direct(shmaliy_hyp_simple(m, N), z);
}

/// Default half-width of the band around z = 1 in which the closed forms
/// are not used: 10^{-(digits/2)}.
MPReal default_guard(int digits);

/// Gamma(N) Gamma(m+2) / Gamma(N+m+1) as an exact rational.
Rational shmaliy_gamma_ratio(std::size_t m, std::size_t N);

/// Closed form
///   1 - (1/(1-z))^{m+1} Gamma(N)Gamma(m+2)/Gamma(N+m+1)
///       [P_{m+1}^{(N-1,-2-2m)}(1-2z) - z^{1-N} P_m^{(1-N,-2-2m)}(1-2z)]
/// evaluated entirely at the precision of `z`. Throws NearSingular when
/// |z - 1| < guard and ZeroArgument at z = 0.
MPComplex transfer_closed(std::size_t m, std::size_t N, const MPComplex& z);
MPComplex transfer_closed(std::size_t m, std::size_t N, const MPComplex& z, const MPReal& guard);

struct ResponseSample {
  double omega_t = 0.0;
  MPComplex value;
  MPReal magnitude;
  MPReal phase;
  int digits = kDefaultDigits;
  bool direct_fallback = false;  // evaluated by the direct tap sum
};

ResponseSample make_response_sample(double omega_t, MPComplex value, bool direct_fallback);

/// Throws std::invalid_argument unless every point lies in (0, 2 pi) and
/// digits >= 9.
void validate_response_grid(std::span<const double> grid, int digits);

/// Closed-form samples on z = exp(j omega_t), falling back to the direct sum
/// inside the guard band. Output order follows the grid.
std::vector<ResponseSample> frequency_response(std::size_t m, std::size_t N,
                                               std::span<const double> grid, int digits);

struct CancellationPoint {
  double omega_t = 0.0;
  MPComplex low;     // closed form at low precision
  MPComplex high;    // closed form at high precision
  MPComplex oracle;  // direct sum at high precision
  double rel_err_low = 0.0;
  double rel_err_high = 0.0;
};

struct CancellationReport {
  std::size_t order = 0;
  std::size_t window = 0;
  int low_digits = 0;
  int high_digits = 0;
  std::vector<CancellationPoint> points;
  double max_rel_err_low = 0.0;
  double max_rel_err_high = 0.0;
};

/// Compares the closed form at two precisions against the high-precision
/// direct sum. Requires low_digits < high_digits.
CancellationReport cancellation_report(std::size_t m, std::size_t N, std::span<const double> grid,
                                       int low_digits, int high_digits);

/// `points` logarithmically spaced values on [lo, hi] (lo > 0).
std::vector<double> log_grid(double lo, double hi, std::size_t points);
/// `points` evenly spaced values on [lo, hi].
std::vector<double> linear_grid(double lo, double hi, std::size_t points);

/// |a - b| / |b| evaluated at the higher of the two precisions.
double relative_error(const MPComplex& a, const MPComplex& b);

}  // namespace hahnfir

#endif  // HAHNFIR_SHMALIY_TRANSFER_HPP_
