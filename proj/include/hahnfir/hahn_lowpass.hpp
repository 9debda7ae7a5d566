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

#ifndef HAHNFIR_HAHN_LOWPASS_HPP_
#define HAHNFIR_HAHN_LOWPASS_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "hahnfir/errors.hpp"
#include "hahnfir/hypergeom.hpp"
#include "hahnfir/orthopoly.hpp"
#include "hahnfir/shmaliy.hpp"
#include "hahnfir/shmaliy_transfer.hpp"

namespace hahnfir {

/// Uniformly sampled signal. `origin` is the index of samples[0]; `period`
/// is carried as metadata only.
template <class T>
struct BasicSignal {
  Eigen::Matrix<T, Eigen::Dynamic, 1> samples;
  long origin = 0;
  double period = 1.0;

  std::size_t size() const { return static_cast<std::size_t>(samples.size()); }
};

using Signal = BasicSignal<double>;
using ExactSignal = BasicSignal<Rational>;

/// Throws std::invalid_argument on NaN/Inf samples or a nonpositive period.
Signal make_signal(std::span<const double> values, long origin = 0, double period = 1.0);
ExactSignal make_exact_signal(std::vector<Rational> values, long origin = 0);

/// Which support points the orthogonal difference sums over: k = 0..N-1
/// (the low-pass kernel as printed, which drops the last Hahn support point)
/// or the full Hahn support k = 0..N.
enum class SupportBounds { printed, full };

/// Kernel of the order-n orthogonal difference with step 1:
///   kernel[k] = (k_n n!/h_n) Q_n(k; alpha, beta, N) w(k; alpha, beta, N).
/// Throws OrderExceedsWindow when n > N and std::invalid_argument unless
/// alpha, beta > -1.
RationalVector orthogonal_difference_kernel(std::size_t n, const Rational& alpha, const Rational& beta,
                                            std::size_t N, SupportBounds bounds = SupportBounds::printed);

/// sum_k f(x+k) kernel[k]. `x` is an absolute sample index (origin-based).
/// Throws WindowOutOfRange when the window leaves the signal.
template <class T>
T orthogonal_difference(const BasicSignal<T>& f, std::size_t n, const Rational& alpha,
                        const Rational& beta, std::size_t N, long x,
                        SupportBounds bounds = SupportBounds::printed) {
  const RationalVector kernel = orthogonal_difference_kernel(n, alpha, beta, N, bounds);
  const long start = x - f.origin;
  if (start < 0 || start + kernel.size() > f.samples.size()) {
    throw WindowOutOfRange("orthogonal difference window [" + std::to_string(x) + ", " +
                           std::to_string(x + kernel.size() - 1) + "] leaves the signal");
  }
  T acc = lift(Rational(0), T{});
  for (Eigen::Index k = 0; k < kernel.size(); ++k) acc = acc + lift(kernel(k), T{}) * f.samples(start + k);
  return acc;
}

/// The n = 0 kernel
///   taps[m] = Gamma(N+1)/(alpha+2)_N (alpha+1)_m (beta+1)_{N-m} / ((N-m)! m!),
/// m = 0..N-1. Throws SingularLowerParameter when (alpha+2)_N = 0.
CoefficientVector lowpass_weights(const Rational& alpha, const Rational& beta, std::size_t N);

/// N / (N + alpha + 1): the tap sum of the beta = 0 kernel.
Rational lowpass_dc_gain(const Rational& alpha, std::size_t N);

template <Scalar S>
S lp_transfer_direct(const Rational& alpha, const Rational& beta, std::size_t N, const S& z) {
  return transfer_direct(lowpass_weights(alpha, beta, N), z);
}

namespace detail {

inline bool near_one(const Rational& z) { return z == Rational(1); }
inline bool near_one(const MPComplex& z) {
  return (MPComplex(Rational(1), z.digits()) - z).abs() < default_guard(z.digits());
}
inline bool near_one(const std::complex<double>& z) { return std::abs(z - 1.0) < 1e-8; }

void require_nonnegative_alpha(long alpha);

}  // namespace detail

/// beta = 0 closed form
///   (N/(N+alpha+1)) z^{1-N} 2F1(1-N, 1; alpha+2; 1-z),
/// returning the exact limit N/(N+alpha+1) inside the guard band around z = 1.
template <Scalar S>
S lp_transfer_closed(long alpha, std::size_t N, const S& z) {
  detail::require_nonnegative_alpha(alpha);
  if (N == 0) throw std::invalid_argument("window length must be positive");
  if (is_zero(z)) throw ZeroArgument();
  const Rational gain = lowpass_dc_gain(Rational(alpha), N);
  if (detail::near_one(z)) return lift(gain, z);
  const long lN = static_cast<long>(N);
  const PFQSpec<S> series{{Rational(1 - lN), Rational(1)}, {Rational(alpha + 2)},
                          lift(Rational(1), z) - z, N - 1};
  return lift(gain, z) * pow_int(z, 1 - lN) * eval_pfq(series);
}

/// The same value through (Gamma(N+1)/(alpha+2)_N) z^{1-N} P_{N-1}^{(alpha+1, -alpha-N)}(2z-1).
template <Scalar S>
S lp_transfer_closed_jacobi(long alpha, std::size_t N, const S& z) {
  detail::require_nonnegative_alpha(alpha);
  if (N == 0) throw std::invalid_argument("window length must be positive");
  if (is_zero(z)) throw ZeroArgument();
  const long lN = static_cast<long>(N);
  const Rational scale = factorial(N) / pochhammer(Rational(alpha + 2), N);
  const S x = lift(Rational(2), z) * z - lift(Rational(1), z);
  return lift(scale, z) * pow_int(z, 1 - lN) *
         jacobi_eval(N - 1, Rational(alpha + 1), Rational(-alpha - lN), x);
}

/// General-beta form
///   (beta+1)_N/(alpha+2)_N 2F1(-N, alpha+1; -beta-N; 1/z) - (alpha+1)_N/(alpha+2)_N z^{-N}.
/// The lower parameter is checked through term N+1, where the upper -N
/// terminates the series; at beta = 0 both vanish there and the series is
/// rejected with SingularLowerParameter.
template <Scalar S>
S lp_transfer_general_beta(const Rational& alpha, const Rational& beta, std::size_t N, const S& z) {
  if (N == 0) throw std::invalid_argument("window length must be positive");
  if (is_zero(z)) throw ZeroArgument();
  const long lN = static_cast<long>(N);
  const Rational lower = -beta - lN;
  if ((lower + lN).is_zero()) {
    throw SingularLowerParameter(N + 1, lower, "(-beta-N)_k and (-N)_k vanish together at k = N+1; "
                                               "for beta = 0 use lp_transfer_closed");
  }
  const Rational norm = pochhammer(alpha + 2, N);
  if (norm.is_zero()) throw SingularLowerParameter(N, alpha + 2, "(alpha+2)_N");
  const PFQSpec<S> series{{Rational(-lN), alpha + 1}, {lower}, lift(Rational(1), z) / z, N};
  return lift(pochhammer(beta + 1, N) / norm, z) * eval_pfq(series) -
         lift(pochhammer(alpha + 1, N) / norm, z) * pow_int(z, -lN);
}

struct UnbiasednessReport {
  Rational alpha;
  std::size_t window = 0;
  std::size_t quad_points = 0;
  std::complex<double> integral_h;      // I1 = int_0^{2pi} H
  std::complex<double> integral_h_sq;   // I2 = int_0^{2pi} |H|^2
  double oracle_h = 0.0;                // 2 pi taps[0]
  double oracle_h_sq = 0.0;             // 2 pi sum taps^2
  Rational first_tap;
  Rational tap_energy;
  /// Whether both integrals vanish to 1e-10, as the zero-integral criterion
  /// would require. They do not for any nontrivial kernel.
  bool integrals_vanish = false;
};

/// Uniform trapezoid quadrature of the beta = 0 transfer function on the unit
/// circle. Requires quad_points >= 4N.
UnbiasednessReport unbiasedness_integrals(const Rational& alpha, std::size_t N, std::size_t quad_points);

/// output[x] = sum_n taps[n] signal[x+n]; output length = input length - N + 1
/// and output.origin = signal.origin. Throws SignalTooShort.
template <class T>
BasicSignal<T> apply_fir(const BasicSignal<T>& signal, const CoefficientVector& coeffs) {
  const auto N = static_cast<Eigen::Index>(coeffs.window);
  if (N == 0 || signal.samples.size() < N) throw SignalTooShort(signal.size(), coeffs.window);
  Eigen::Matrix<T, Eigen::Dynamic, 1> taps(N);
  for (Eigen::Index n = 0; n < N; ++n) taps(n) = lift(coeffs.taps(n), T{});
  BasicSignal<T> out;
  out.origin = signal.origin;
  out.period = signal.period;
  out.samples.resize(signal.samples.size() - N + 1);
  for (Eigen::Index x = 0; x < out.samples.size(); ++x) {
    T acc = lift(Rational(0), T{});
    for (Eigen::Index n = 0; n < N; ++n) acc = acc + taps(n) * signal.samples(x + n);
    out.samples(x) = acc;
  }
  return out;
}

/// Frequency response of the low-pass kernel by the direct tap sum. The
/// closed 2F1 form loses about N log10(2) digits near omega*T = pi.
std::vector<ResponseSample> lowpass_frequency_response(const Rational& alpha, const Rational& beta,
                                                       std::size_t N, std::span<const double> grid,
                                                       int digits);

}  // namespace hahnfir

#endif  // HAHNFIR_HAHN_LOWPASS_HPP_
