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

#ifndef HAHNFIR_SHMALIY_HPP_
#define HAHNFIR_SHMALIY_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hahnfir/rational.hpp"

namespace hahnfir {

enum class FamilyKind { shmaliy, hahn_lowpass };

/// Which filter a tap vector belongs to: Shmaliy order m, or the Hahn
/// low-pass kernel with parameters (alpha, beta).
struct Family {
  FamilyKind kind = FamilyKind::shmaliy;
  std::size_t order = 0;
  Rational alpha;
  Rational beta;

  static Family shmaliy(std::size_t m) { return {FamilyKind::shmaliy, m, {}, {}}; }
  static Family hahn_lowpass(const Rational& alpha, const Rational& beta) {
    return {FamilyKind::hahn_lowpass, 0, alpha, beta};
  }
  friend bool operator==(const Family&, const Family&) = default;
};

enum class Route { hankel, recurrence, hyp_full, hyp_simple, hahn_closed, weights };

std::string to_string(FamilyKind kind);
std::string to_string(Route route);

/// FIR impulse response of length N with exact taps indexed n = 0..N-1.
struct CoefficientVector {
  Family family;
  std::size_t window = 0;
  RationalVector taps;
  Route route = Route::hyp_simple;

  Rational sum() const;
};

inline constexpr std::array<Route, 5> kShmaliyRoutes = {
    Route::hankel, Route::recurrence, Route::hyp_full, Route::hyp_simple, Route::hahn_closed};

// Every route requires m + 1 <= N and throws OrderTooLarge otherwise.

/// a_im(N) = (-1)^i M_{(i+1),1} / |H_m(N)| from exact Hankel minors.
CoefficientVector shmaliy_hankel(std::size_t m, std::size_t N);

/// Three-term recurrence from h_{-1} = 0, h_0 = 1/N, with the second term
/// applied to h_{m-2}.
CoefficientVector shmaliy_recurrence(std::size_t m, std::size_t N);

/// The 3F2 with lower parameters n-m and 1-N-m+n, evaluated with the
/// Pochhammer quotients cancelled term by term:
///   (n-m)_m/(n-m)_k = (n-m+k)_{m-k},  (N-n)_m/(1-N-m+n)_k = (-1)^k (N-n)_{m-k}.
CoefficientVector shmaliy_hyp_full(std::size_t m, std::size_t N);

/// ((m+1)^2/N) 3F2(-m, n+1, m+2; 2, N+1; 1).
CoefficientVector shmaliy_hyp_simple(std::size_t m, std::size_t N);

/// ((m+1)^2/N) Q_m(-1-n; 1, 0, -1-N).
CoefficientVector shmaliy_hahn_closed(std::size_t m, std::size_t N);

CoefficientVector shmaliy_coefficients(Route route, std::size_t m, std::size_t N);

struct RouteAgreement {
  bool agree = true;
  std::optional<std::string> first_mismatch;
};

/// Builds all five routes and compares them tap by tap, exactly.
RouteAgreement compare_shmaliy_routes(std::size_t m, std::size_t N);

/// Orthogonality weight rho(n, N) = 2n / (N(N-1)).
Rational shmaliy_weight(std::size_t n, std::size_t N);

/// (d_m)^2 in the Gamma-ratio form
///   (m+1) Gamma(N-1) Gamma(N) / (Gamma(N-m-1) N Gamma(N+m+1))
/// = (m+1) (N-m-1)_m / (N (N)_{m+1}), evaluated as exact products.
Rational shmaliy_norm_squared(std::size_t m, std::size_t N);

/// The Pochhammer form (m+1)(N-m-1) / (N (N)_{m+1}) as typeset; it agrees
/// with the Gamma form only at m = 1.
Rational shmaliy_norm_squared_pochhammer_form(std::size_t m, std::size_t N);

enum class CheckKind {
  required,  // must hold for a correct implementation
  erratum,   // a typeset formula that is reported, not enforced
};

struct PropertyCheck {
  std::string name;
  Rational lhs;
  Rational rhs;
  bool holds = false;
  CheckKind kind = CheckKind::required;
};

struct PropertyReport {
  std::size_t order = 0;
  std::size_t window = 0;
  std::vector<PropertyCheck> checks;

  bool all_required_hold() const;
};

/// Exact checks for h_m: unit sum, vanishing moments 1..m, orthogonality
/// against h_0..h_{m-1}, and the norm under rho. Requires N >= 2.
PropertyReport verify_shmaliy_properties(std::size_t m, std::size_t N);

}  // namespace hahnfir

#endif  // HAHNFIR_SHMALIY_HPP_
