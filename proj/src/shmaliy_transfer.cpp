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

#include "hahnfir/shmaliy_transfer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hahnfir/exactnum.hpp"
#include "hahnfir/orthopoly.hpp"

namespace hahnfir {

MPReal default_guard(int digits) {
  MPReal guard(digits);
  mpfr_ui_pow_ui(guard.get(), 10, static_cast<unsigned long>(digits / 2), MPFR_RNDN);
  mpfr_ui_div(guard.get(), 1, guard.get(), MPFR_RNDN);
  return guard;
}

Rational shmaliy_gamma_ratio(std::size_t m, std::size_t N) {
  if (N == 0) throw std::invalid_argument("window length must be positive");
  return factorial(N - 1) * factorial(m + 1) / factorial(N + m);
}

MPComplex transfer_closed(std::size_t m, std::size_t N, const MPComplex& z) {
  return transfer_closed(m, N, z, default_guard(z.digits()));
}

MPComplex transfer_closed(std::size_t m, std::size_t N, const MPComplex& z, const MPReal& guard) {
  if (m + 1 > N) throw OrderTooLarge(m, N);
  if (z.is_zero()) throw ZeroArgument();
  const MPComplex one(Rational(1), z.digits());
  const MPComplex gap = one - z;
  if (gap.abs() < guard) {
    throw NearSingular("closed transfer form inside |z-1| < guard; use the direct sum");
  }
  const long lm = static_cast<long>(m);
  const long lN = static_cast<long>(N);
  const MPComplex x = one - lift(Rational(2), z) * z;
  const MPComplex upper = jacobi_eval(m + 1, Rational(lN - 1), Rational(-2 - 2 * lm), x);
  const MPComplex lower = jacobi_eval(m, Rational(1 - lN), Rational(-2 - 2 * lm), x);
  const MPComplex bracket = upper - pow_int(z, 1 - lN) * lower;
  const MPComplex prefactor = pow_int(one / gap, lm + 1) * lift(shmaliy_gamma_ratio(m, N), z);
  return one - prefactor * bracket;
}

ResponseSample make_response_sample(double omega_t, MPComplex value, bool direct_fallback) {
  ResponseSample s;
  s.omega_t = omega_t;
  s.magnitude = value.abs();
  s.phase = value.arg();
  s.digits = value.digits();
  s.value = std::move(value);
  s.direct_fallback = direct_fallback;
  return s;
}

void validate_response_grid(std::span<const double> grid, int digits) {
  if (digits < 9) throw std::invalid_argument("digits must be at least 9");
  for (double w : grid) {
    if (!(w > 0.0 && w < 2.0 * std::numbers::pi)) {
      throw std::invalid_argument("omega_t " + std::to_string(w) + " outside (0, 2*pi)");
    }
  }
}

std::vector<ResponseSample> frequency_response(std::size_t m, std::size_t N,
                                               std::span<const double> grid, int digits) {
  validate_response_grid(grid, digits);
  const CoefficientVector taps = shmaliy_hyp_simple(m, N);
  const MPReal guard = default_guard(digits);
  std::vector<ResponseSample> out;
  out.reserve(grid.size());
  for (double w : grid) {
    const MPComplex z = MPComplex::unit(w, digits);
    try {
      out.push_back(make_response_sample(w, transfer_closed(m, N, z, guard), false));
    } catch (const NearSingular&) {
      out.push_back(make_response_sample(w, transfer_direct(taps, z), true));
    }
  }
  return out;
}

double relative_error(const MPComplex& a, const MPComplex& b) {
  const int digits = std::max(a.digits(), b.digits());
  const MPComplex diff = a.with_digits(digits) - b.with_digits(digits);
  const MPReal scale = b.with_digits(digits).abs();
  if (scale.is_zero()) return diff.abs().to_double();
  return (diff.abs() / scale).to_double();
}

CancellationReport cancellation_report(std::size_t m, std::size_t N, std::span<const double> grid,
                                       int low_digits, int high_digits) {
  if (!(low_digits < high_digits)) throw std::invalid_argument("low_digits must be below high_digits");
  CancellationReport report;
  report.order = m;
  report.window = N;
  report.low_digits = low_digits;
  report.high_digits = high_digits;
  if (grid.empty()) return report;
  validate_response_grid(grid, low_digits);
  const CoefficientVector taps = shmaliy_hyp_simple(m, N);
  for (double w : grid) {
    const MPComplex z_low = MPComplex::unit(w, low_digits);
    const MPComplex z_high = MPComplex::unit(w, high_digits);
    auto closed_or_direct = [&](const MPComplex& z) {
      try {
        return transfer_closed(m, N, z);
      } catch (const NearSingular&) {
        return transfer_direct(taps, z);
      }
    };
    CancellationPoint p{w, closed_or_direct(z_low), closed_or_direct(z_high),
                        transfer_direct(taps, z_high), 0.0, 0.0};
    p.rel_err_low = relative_error(p.low, p.oracle);
    p.rel_err_high = relative_error(p.high, p.oracle);
    report.max_rel_err_low = std::max(report.max_rel_err_low, p.rel_err_low);
    report.max_rel_err_high = std::max(report.max_rel_err_high, p.rel_err_high);
    report.points.push_back(std::move(p));
  }
  return report;
}

std::vector<double> log_grid(double lo, double hi, std::size_t points) {
  if (!(lo > 0.0) || hi < lo) throw std::invalid_argument("log grid needs 0 < lo <= hi");
  if (points == 0) return {};
  if (points == 1) return {lo};
  std::vector<double> grid(points);
  const double a = std::log(lo);
  const double step = (std::log(hi) - a) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) grid[i] = std::exp(a + step * static_cast<double>(i));
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t points) {
  if (hi < lo) throw std::invalid_argument("linear grid needs lo <= hi");
  if (points == 0) return {};
  if (points == 1) return {lo};
  std::vector<double> grid(points);
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) grid[i] = lo + step * static_cast<double>(i);
  grid.back() = hi;
  return grid;
}

}  // namespace hahnfir
