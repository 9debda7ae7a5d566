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

#include "hahnfir/hahn_lowpass.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hahnfir {

Signal make_signal(std::span<const double> values, long origin, double period) {
  if (!(period > 0.0) || !std::isfinite(period)) throw std::invalid_argument("sample period must be positive");
  Signal s;
  s.origin = origin;
  s.period = period;
  s.samples.resize(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw std::invalid_argument("non-finite sample at position " + std::to_string(i));
    }
    s.samples(static_cast<Eigen::Index>(i)) = values[i];
  }
  return s;
}

ExactSignal make_exact_signal(std::vector<Rational> values, long origin) {
  ExactSignal s;
  s.origin = origin;
  s.samples.resize(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) s.samples(static_cast<Eigen::Index>(i)) = std::move(values[i]);
  return s;
}

RationalVector orthogonal_difference_kernel(std::size_t n, const Rational& alpha, const Rational& beta,
                                            std::size_t N, SupportBounds bounds) {
  if (n > N) {
    throw OrderExceedsWindow("orthogonal difference order " + std::to_string(n) + " exceeds N = " +
                             std::to_string(N));
  }
  if (alpha <= Rational(-1) || beta <= Rational(-1)) {
    throw std::invalid_argument("orthogonal difference needs alpha, beta > -1");
  }
  const long lN = static_cast<long>(N);
  const Rational scale = hahn_norm_ratio(n, alpha, beta, lN) * factorial(n);
  const HahnParams q{alpha, beta, Rational(lN), n};
  const std::size_t length = bounds == SupportBounds::printed ? N : N + 1;
  RationalVector kernel(static_cast<Eigen::Index>(length));
  for (std::size_t k = 0; k < length; ++k) {
    const long lk = static_cast<long>(k);
    kernel(static_cast<Eigen::Index>(k)) = scale * hahn_eval(q, Rational(lk)) * hahn_weight(lk, alpha, beta, lN);
  }
  return kernel;
}

CoefficientVector lowpass_weights(const Rational& alpha, const Rational& beta, std::size_t N) {
  if (N == 0) throw std::invalid_argument("window length must be positive");
  const Rational norm = pochhammer(alpha + 2, N);
  if (norm.is_zero()) throw SingularLowerParameter(N, alpha + 2, "(alpha+2)_N");
  const Rational scale = factorial(N) / norm;
  CoefficientVector out{Family::hahn_lowpass(alpha, beta), N, RationalVector(static_cast<Eigen::Index>(N)),
                        Route::weights};
  for (std::size_t m = 0; m < N; ++m) {
    out.taps(static_cast<Eigen::Index>(m)) = scale * pochhammer(alpha + 1, m) * pochhammer(beta + 1, N - m) /
                                             (factorial(N - m) * factorial(m));
  }
  return out;
}

Rational lowpass_dc_gain(const Rational& alpha, std::size_t N) {
  const Rational bigN(static_cast<long>(N));
  return bigN / (bigN + alpha + 1);
}

namespace detail {

void require_nonnegative_alpha(long alpha) {
  if (alpha < 0) throw std::invalid_argument("closed low-pass form needs an integer alpha >= 0");
}

}  // namespace detail

UnbiasednessReport unbiasedness_integrals(const Rational& alpha, std::size_t N, std::size_t quad_points) {
  if (quad_points < 4 * N) throw std::invalid_argument("quadrature needs at least 4N points");
  const CoefficientVector taps = lowpass_weights(alpha, Rational(0), N);
  UnbiasednessReport r;
  r.alpha = alpha;
  r.window = N;
  r.quad_points = quad_points;
  r.first_tap = taps.taps(0);
  r.tap_energy = Rational(0);
  for (const auto& t : taps.taps) r.tap_energy += t * t;

  const double two_pi = 2.0 * std::numbers::pi;
  const double weight = two_pi / static_cast<double>(quad_points);
  std::complex<double> i1 = 0.0;
  std::complex<double> i2 = 0.0;
  for (std::size_t j = 0; j < quad_points; ++j) {
    const double w = two_pi * static_cast<double>(j) / static_cast<double>(quad_points);
    const std::complex<double> h = transfer_direct(taps, std::polar(1.0, w));
    i1 += h;
    i2 += std::norm(h);
  }
  r.integral_h = i1 * weight;
  r.integral_h_sq = i2 * weight;
  r.oracle_h = two_pi * r.first_tap.to_double();
  r.oracle_h_sq = two_pi * r.tap_energy.to_double();
  r.integrals_vanish = std::abs(r.integral_h) < 1e-10 && std::abs(r.integral_h_sq) < 1e-10;
  return r;
}

std::vector<ResponseSample> lowpass_frequency_response(const Rational& alpha, const Rational& beta,
                                                       std::size_t N, std::span<const double> grid,
                                                       int digits) {
  validate_response_grid(grid, digits);
  const CoefficientVector taps = lowpass_weights(alpha, beta, N);
  std::vector<ResponseSample> out;
  out.reserve(grid.size());
  for (double w : grid) out.push_back(make_response_sample(w, transfer_direct(taps, MPComplex::unit(w, digits)), true));
  return out;
}

}  // namespace hahnfir
