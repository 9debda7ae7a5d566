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

#include "hahnfir/orthopoly.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "hahnfir/errors.hpp"
#include "hahnfir/hypergeom.hpp"

namespace hahnfir {

Rational power_sum_direct(std::size_t k, std::size_t N) {
  Rational acc(0);
  for (std::size_t i = 0; i < N; ++i) acc += pow(Rational(static_cast<long>(i)), static_cast<long>(k));
  return acc;
}

Rational power_sum_bernoulli(std::size_t k, std::size_t N) {
  const Rational top = bernoulli_polynomial(k + 1, Rational(static_cast<long>(N)));
  return (top - bernoulli_number(k + 1)) / Rational(static_cast<long>(k + 1));
}

Rational power_sum(std::size_t k, std::size_t N) {
  Rational direct = power_sum_direct(k, N);
  if (direct != power_sum_bernoulli(k, N)) {
    throw std::logic_error("power_sum: Bernoulli route disagrees with direct summation at k=" +
                           std::to_string(k) + ", N=" + std::to_string(N));
  }
  return direct;
}

Rational hahn_eval(const HahnParams& p, const Rational& y) {
  const long n = static_cast<long>(p.degree);
  const std::vector<Rational> upper{Rational(-n), n + p.alpha + p.beta + 1, -y};
  const std::vector<Rational> lower{p.alpha + 1, -p.M};
  const auto coeffs = pfq_coefficients(upper, lower, p.degree);
  Rational acc(0);
  for (const auto& c : coeffs) acc += c;
  return acc;
}

Rational hahn_weight(long x, const Rational& alpha, const Rational& beta, long M) {
  if (x < 0 || x > M) {
    throw OutOfSupport("Hahn weight requested at x=" + std::to_string(x) + " outside 0.." +
                       std::to_string(M));
  }
  const auto ux = static_cast<std::size_t>(x);
  const auto rest = static_cast<std::size_t>(M - x);
  return pochhammer(alpha + 1, ux) * pochhammer(beta + 1, rest) / (factorial(ux) * factorial(rest));
}

Rational hahn_norm_ratio(std::size_t n, const Rational& alpha, const Rational& beta, long M) {
  if (M < 0) throw std::invalid_argument("hahn_norm_ratio: M must be nonnegative");
  const long ln = static_cast<long>(n);
  const Rational s = n + alpha + beta + 1;
  const Rational beta_poch = pochhammer(beta + 1, n);
  const Rational long_poch = pochhammer(s, static_cast<std::size_t>(M + 1));
  if (beta_poch.is_zero()) throw SingularLowerParameter(n, beta + 1, "(beta+1)_n in norm ratio");
  if (long_poch.is_zero()) throw SingularLowerParameter(static_cast<std::size_t>(M + 1), s, "(n+alpha+beta+1)_{M+1} in norm ratio");
  const Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
  return sign * (2 * ln + alpha + beta + 1) / beta_poch * pochhammer(s, n) / long_poch *
         factorial(static_cast<std::size_t>(M)) / factorial(n);
}

std::vector<Rational> jacobi_coefficients(std::size_t n, const Rational& a, const Rational& b) {
  const long ln = static_cast<long>(n);
  const Rational inv_nfact = Rational(1) / factorial(n);
  std::vector<Rational> coeffs;
  coeffs.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    coeffs.push_back(inv_nfact * binomial(n, k) * pochhammer(ln + a + b + 1, k) *
                     pochhammer(a + static_cast<long>(k) + 1, n - k));
  }
  return coeffs;
}

HankelMatrix hankel_build(std::size_t m, std::size_t N) {
  if (m + 1 > N) throw OrderTooLarge(m, N);
  std::vector<Rational> moments(2 * m + 1);
  for (std::size_t k = 0; k < moments.size(); ++k) moments[k] = power_sum(k, N);
  const auto size = static_cast<Eigen::Index>(m + 1);
  HankelMatrix h{m, N, RationalMatrix(size, size)};
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = 0; j < size; ++j) h.entries(i, j) = moments[static_cast<std::size_t>(i + j)];
  }
  return h;
}

Rational bareiss_determinant(RationalMatrix a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("bareiss_determinant: matrix is not square");
  if (n == 0) return Rational(1);
  Rational sign(1);
  Rational previous(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && a(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return Rational(0);
      a.row(k).swap(a.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

RationalMatrix minor_matrix(const RationalMatrix& a, Eigen::Index row, Eigen::Index col) {
  RationalMatrix out(a.rows() - 1, a.cols() - 1);
  for (Eigen::Index i = 0, oi = 0; i < a.rows(); ++i) {
    if (i == row) continue;
    for (Eigen::Index j = 0, oj = 0; j < a.cols(); ++j) {
      if (j == col) continue;
      out(oi, oj++) = a(i, j);
    }
    ++oi;
  }
  return out;
}

}  // namespace hahnfir
