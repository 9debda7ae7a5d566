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

#include "hahnfir/shmaliy.hpp"

#include <stdexcept>

#include "hahnfir/errors.hpp"
#include "hahnfir/exactnum.hpp"
#include "hahnfir/hypergeom.hpp"
#include "hahnfir/orthopoly.hpp"

namespace hahnfir {

std::string to_string(FamilyKind kind) {
  return kind == FamilyKind::shmaliy ? "shmaliy" : "hahn-lp";
}

std::string to_string(Route route) {
  switch (route) {
    case Route::hankel: return "hankel";
    case Route::recurrence: return "recurrence";
    case Route::hyp_full: return "hyp-full";
    case Route::hyp_simple: return "hyp-simple";
    case Route::hahn_closed: return "hahn-closed";
    case Route::weights: return "weights";
  }
  return "unknown";
}

Rational CoefficientVector::sum() const {
  Rational acc(0);
  for (const auto& t : taps) acc += t;
  return acc;
}

namespace {

void require_window(std::size_t m, std::size_t N) {
  if (m + 1 > N) throw OrderTooLarge(m, N);
}

CoefficientVector make_vector(std::size_t m, std::size_t N, Route route) {
  return {Family::shmaliy(m), N, RationalVector(static_cast<Eigen::Index>(N)), route};
}

Rational sign_of_power(std::size_t k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

CoefficientVector shmaliy_hankel(std::size_t m, std::size_t N) {
  require_window(m, N);
  const HankelMatrix h = hankel_build(m, N);
  const Rational det = bareiss_determinant(h.entries);
  std::vector<Rational> a(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    const auto minor = minor_matrix(h.entries, static_cast<Eigen::Index>(i), 0);
    a[i] = sign_of_power(i) * bareiss_determinant(minor) / det;
  }
  CoefficientVector out = make_vector(m, N, Route::hankel);
  for (std::size_t n = 0; n < N; ++n) out.taps(static_cast<Eigen::Index>(n)) = horner(a, Rational(static_cast<long>(n)));
  return out;
}

CoefficientVector shmaliy_recurrence(std::size_t m, std::size_t N) {
  require_window(m, N);
  const auto size = static_cast<Eigen::Index>(N);
  const Rational bigN(static_cast<long>(N));
  RationalVector older = RationalVector::Constant(size, Rational(0));
  RationalVector current = RationalVector::Constant(size, Rational(1) / bigN);
  for (std::size_t j = 1; j <= m; ++j) {
    const Rational r(static_cast<long>(j));
    const Rational denom = r * (2 * r - 1) * (bigN + r);
    const Rational second = (2 * r + 1) * (bigN - r) / ((2 * r - 1) * (bigN + r));
    RationalVector next(size);
    for (Eigen::Index n = 0; n < size; ++n) {
      const Rational x(static_cast<long>(n));
      const Rational first = 2 * (r * r * (2 * bigN - 1) - (4 * r * r - 1) * x) / denom;
      next(n) = first * current(n) - second * older(n);
    }
    older = std::move(current);
    current = std::move(next);
  }
  CoefficientVector out = make_vector(m, N, Route::recurrence);
  out.taps = std::move(current);
  return out;
}

CoefficientVector shmaliy_hyp_full(std::size_t m, std::size_t N) {
  require_window(m, N);
  const long lm = static_cast<long>(m);
  const long lN = static_cast<long>(N);
  const Rational lead = sign_of_power(m) * Rational(lm + 1) /
                        (factorial(m) * pochhammer(Rational(lN), m + 1));
  CoefficientVector out = make_vector(m, N, Route::hyp_full);
  for (std::size_t n = 0; n < N; ++n) {
    const long ln = static_cast<long>(n);
    Rational acc(0);
    for (std::size_t k = 0; k <= m; ++k) {
      const long lk = static_cast<long>(k);
      Rational term = pochhammer(Rational(-lm), k) * pochhammer(Rational(ln + 1), k) *
                      pochhammer(Rational(1 - lN + ln), k) / factorial(k);
      term *= pochhammer(Rational(ln - lm + lk), m - k);
      term *= sign_of_power(k) * pochhammer(Rational(lN - ln), m - k);
      acc += term;
    }
    out.taps(static_cast<Eigen::Index>(n)) = lead * acc;
  }
  return out;
}

CoefficientVector shmaliy_hyp_simple(std::size_t m, std::size_t N) {
  require_window(m, N);
  const long lm = static_cast<long>(m);
  const long lN = static_cast<long>(N);
  const Rational scale = Rational((lm + 1) * (lm + 1)) / Rational(lN);
  CoefficientVector out = make_vector(m, N, Route::hyp_simple);
  for (std::size_t n = 0; n < N; ++n) {
    const PFQSpec<Rational> spec{{Rational(-lm), Rational(static_cast<long>(n) + 1), Rational(lm + 2)},
                                 {Rational(2), Rational(lN + 1)},
                                 Rational(1),
                                 m};
    out.taps(static_cast<Eigen::Index>(n)) = scale * eval_pfq(spec);
  }
  return out;
}

CoefficientVector shmaliy_hahn_closed(std::size_t m, std::size_t N) {
  require_window(m, N);
  const long lm = static_cast<long>(m);
  const long lN = static_cast<long>(N);
  const Rational scale = Rational((lm + 1) * (lm + 1)) / Rational(lN);
  const HahnParams params{Rational(1), Rational(0), Rational(-1 - lN), m};
  CoefficientVector out = make_vector(m, N, Route::hahn_closed);
  for (std::size_t n = 0; n < N; ++n) {
    out.taps(static_cast<Eigen::Index>(n)) = scale * hahn_eval(params, Rational(-1 - static_cast<long>(n)));
  }
  return out;
}

CoefficientVector shmaliy_coefficients(Route route, std::size_t m, std::size_t N) {
  switch (route) {
    case Route::hankel: return shmaliy_hankel(m, N);
    case Route::recurrence: return shmaliy_recurrence(m, N);
    case Route::hyp_full: return shmaliy_hyp_full(m, N);
    case Route::hyp_simple: return shmaliy_hyp_simple(m, N);
    case Route::hahn_closed: return shmaliy_hahn_closed(m, N);
    case Route::weights: break;
  }
  throw std::invalid_argument("route '" + to_string(route) + "' does not build Shmaliy taps");
}

RouteAgreement compare_shmaliy_routes(std::size_t m, std::size_t N) {
  const CoefficientVector reference = shmaliy_hyp_simple(m, N);
  for (Route route : kShmaliyRoutes) {
    if (route == Route::hyp_simple) continue;
    const CoefficientVector other = shmaliy_coefficients(route, m, N);
    for (Eigen::Index n = 0; n < reference.taps.size(); ++n) {
      if (other.taps(n) != reference.taps(n)) {
        return {false, "m=" + std::to_string(m) + " N=" + std::to_string(N) + " n=" +
                           std::to_string(n) + ": " + to_string(route) + " gives " +
                           other.taps(n).to_string() + ", hyp_simple gives " +
                           reference.taps(n).to_string()};
      }
    }
  }
  return {};
}

Rational shmaliy_weight(std::size_t n, std::size_t N) {
  if (N < 2) throw std::invalid_argument("shmaliy_weight: N must be at least 2");
  const long lN = static_cast<long>(N);
  return Rational(2 * static_cast<long>(n)) / Rational(lN * (lN - 1));
}

Rational shmaliy_norm_squared(std::size_t m, std::size_t N) {
  require_window(m, N);
  const long lm = static_cast<long>(m);
  const long lN = static_cast<long>(N);
  // Gamma(N-1)/Gamma(N-m-1) = (N-m-1)_m and Gamma(N)/Gamma(N+m+1) = 1/(N)_{m+1};
  // the first product is zero at N = m+1, where 1/Gamma(0) = 0.
  return Rational(lm + 1) * pochhammer(Rational(lN - lm - 1), m) /
         (Rational(lN) * pochhammer(Rational(lN), m + 1));
}

Rational shmaliy_norm_squared_pochhammer_form(std::size_t m, std::size_t N) {
  require_window(m, N);
  const long lm = static_cast<long>(m);
  const long lN = static_cast<long>(N);
  return Rational((lm + 1) * (lN - lm - 1)) / (Rational(lN) * pochhammer(Rational(lN), m + 1));
}

bool PropertyReport::all_required_hold() const {
  for (const auto& c : checks) {
    if (c.kind == CheckKind::required && !c.holds) return false;
  }
  return true;
}

PropertyReport verify_shmaliy_properties(std::size_t m, std::size_t N) {
  require_window(m, N);
  if (N < 2) throw std::invalid_argument("verify_shmaliy_properties: N must be at least 2");
  PropertyReport report{m, N, {}};
  auto add = [&report](std::string name, Rational lhs, Rational rhs, CheckKind kind) {
    const bool holds = lhs == rhs;
    report.checks.push_back({std::move(name), std::move(lhs), std::move(rhs), holds, kind});
  };

  std::vector<CoefficientVector> family;
  for (std::size_t q = 0; q <= m; ++q) family.push_back(shmaliy_hyp_simple(q, N));
  const RationalVector& h = family.back().taps;

  add("sum h_m = 1", family.back().sum(), Rational(1), CheckKind::required);

  for (std::size_t q = 1; q <= m; ++q) {
    Rational moment(0);
    for (std::size_t n = 0; n < N; ++n) {
      moment += pow(Rational(static_cast<long>(n)), static_cast<long>(q)) * h(static_cast<Eigen::Index>(n));
    }
    add("sum n^" + std::to_string(q) + " h_m = 0", moment, Rational(0), CheckKind::required);
  }

  auto weighted_inner = [N](const RationalVector& u, const RationalVector& v) {
    Rational acc(0);
    for (std::size_t n = 0; n < N; ++n) {
      const auto i = static_cast<Eigen::Index>(n);
      acc += shmaliy_weight(n, N) * u(i) * v(i);
    }
    return acc;
  };

  for (std::size_t q = 0; q < m; ++q) {
    add("sum rho h_m h_" + std::to_string(q) + " = 0", weighted_inner(h, family[q].taps), Rational(0),
        CheckKind::required);
  }
  const Rational norm = weighted_inner(h, h);
  add("sum rho h_m^2 = (d_m)^2 [Gamma form]", norm, shmaliy_norm_squared(m, N), CheckKind::required);
  add("sum rho h_m^2 = (d_m)^2 [Pochhammer form]", norm, shmaliy_norm_squared_pochhammer_form(m, N),
      CheckKind::erratum);
  return report;
}

}  // namespace hahnfir
