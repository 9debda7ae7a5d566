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

#ifndef HAHNFIR_ORTHOPOLY_HPP_
#define HAHNFIR_ORTHOPOLY_HPP_

#include <cstddef>
#include <vector>

#include "hahnfir/exactnum.hpp"
#include "hahnfir/rational.hpp"
#include "hahnfir/scalar.hpp"

namespace hahnfir {

// ---------------------------------------------------------------------------
// Power sums c_k(N) = sum_{i=0}^{N-1} i^k, with 0^0 = 1.

Rational power_sum_direct(std::size_t k, std::size_t N);
Rational power_sum_bernoulli(std::size_t k, std::size_t N);

/// Computes both routes and throws std::logic_error if they differ.
Rational power_sum(std::size_t k, std::size_t N);

// ---------------------------------------------------------------------------
// Hahn polynomials Q_n(y; alpha, beta, M) = 3F2(-n, n+alpha+beta+1, -y;
// alpha+1, -M; 1), always summed for k = 0..n.

struct HahnParams {
  Rational alpha;
  Rational beta;
  Rational M;
  std::size_t degree = 0;
};

/// Throws SingularLowerParameter if (alpha+1)_k or (-M)_k vanishes for k <= n.
Rational hahn_eval(const HahnParams& p, const Rational& y);

/// w(x) = (alpha+1)_x (beta+1)_{M-x} / (x! (M-x)!); throws OutOfSupport
/// unless 0 <= x <= M.
Rational hahn_weight(long x, const Rational& alpha, const Rational& beta, long M);

/// Leading-coefficient-to-norm ratio
///   k_n/h_n = (-1)^n (2n+a+b+1)/(b+1)_n * (n+a+b+1)_n/(n+a+b+1)_{M+1} * M!/n!
Rational hahn_norm_ratio(std::size_t n, const Rational& alpha, const Rational& beta, long M);

// ---------------------------------------------------------------------------
// Jacobi polynomials for arbitrary rational parameters.

/// Coefficients of P_n^{(a,b)} in powers of (x-1)/2:
///   (1/n!) C(n,k) (n+a+b+1)_k (a+k+1)_{n-k}.
/// No parameter-dependent division, so negative-integer a or b are fine.
std::vector<Rational> jacobi_coefficients(std::size_t n, const Rational& a, const Rational& b);

template <Scalar S>
S jacobi_eval(std::size_t n, const Rational& a, const Rational& b, const S& x) {
  const S t = (x - lift(Rational(1), x)) / lift(Rational(2), x);
  return horner(jacobi_coefficients(n, a, b), t);
}

// ---------------------------------------------------------------------------
// Hankel moment matrix.

struct HankelMatrix {
  std::size_t order = 0;   // m
  std::size_t window = 0;  // N
  RationalMatrix entries;  // (m+1) x (m+1), entry(i, j) = c_{i+j}(N)
};

/// Throws OrderTooLarge when m + 1 > N.
HankelMatrix hankel_build(std::size_t m, std::size_t N);

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
Rational bareiss_determinant(RationalMatrix a);

/// The matrix with row `row` and column `col` removed.
RationalMatrix minor_matrix(const RationalMatrix& a, Eigen::Index row, Eigen::Index col);

}  // namespace hahnfir

#endif  // HAHNFIR_ORTHOPOLY_HPP_
