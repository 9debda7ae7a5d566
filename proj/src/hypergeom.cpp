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

#include "hahnfir/hypergeom.hpp"

#include <random>

#include "hahnfir/errors.hpp"
#include "hahnfir/exactnum.hpp"

namespace hahnfir {

std::vector<Rational> pfq_coefficients(std::span<const Rational> upper,
                                       std::span<const Rational> lower,
                                       std::size_t terms) {
  std::vector<Rational> coeffs;
  coeffs.reserve(terms + 1);
  coeffs.emplace_back(1);
  for (std::size_t k = 1; k <= terms; ++k) {
    const long shift = static_cast<long>(k - 1);
    Rational den(static_cast<long>(k));
    for (const Rational& b : lower) {
      const Rational factor = b + shift;
      if (factor.is_zero()) throw SingularLowerParameter(k, b);
      den *= factor;
    }
    Rational num(1);
    for (const Rational& a : upper) num *= a + shift;
    coeffs.push_back(coeffs.back() * num / den);
  }
  return coeffs;
}

std::string to_string(ThomaeForm form) {
  switch (form) {
    case ThomaeForm::A1: return "A1";
    case ThomaeForm::A2: return "A2";
    case ThomaeForm::A3: return "A3";
    case ThomaeForm::A4: return "A4";
    case ThomaeForm::A5: return "A5";
    case ThomaeForm::A6: return "A6";
    case ThomaeForm::A7: return "A7";
    case ThomaeForm::A2AsPrinted: return "A2-printed";
    case ThomaeForm::A5AsPrinted: return "A5-printed";
  }
  throw InvalidForm("unknown Thomae form");
}

ThomaeForm parse_thomae_form(std::string_view tag) {
  for (ThomaeForm f : kStandardThomaeForms) {
    if (tag == to_string(f)) return f;
  }
  for (ThomaeForm f : kPrintedVariantForms) {
    if (tag == to_string(f)) return f;
  }
  throw InvalidForm("unknown Thomae form '" + std::string(tag) + "'");
}

PFQSpec<Rational> thomae_lhs(const ThomaeParams& p) {
  const long n = static_cast<long>(p.n);
  return {{Rational(-n), p.a, p.b}, {p.c, p.d}, Rational(1), p.n};
}

namespace {

Rational checked_ratio(const Rational& num, std::initializer_list<std::pair<Rational, Rational>> den,
                       std::size_t n) {
  // `den` holds (parameter, (parameter)_n) pairs so the error can name the
  // parameter whose Pochhammer vanished.
  Rational d(1);
  for (const auto& [param, value] : den) {
    if (value.is_zero()) throw SingularLowerParameter(n, param, "prefactor denominator");
    d *= value;
  }
  return num / d;
}

}  // namespace

ThomaeRewrite thomae_transform(ThomaeForm form, const ThomaeParams& p) {
  const std::size_t n = p.n;
  const long ln = static_cast<long>(n);
  const Rational& a = p.a;
  const Rational& b = p.b;
  const Rational& c = p.c;
  const Rational& d = p.d;
  const Rational minus_n(-ln);
  const Rational one(1);
  const Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
  auto P = [n](const Rational& x) { return pochhammer(x, n); };
  const std::pair<Rational, Rational> pc{c, P(c)};
  const std::pair<Rational, Rational> pd{d, P(d)};

  switch (form) {
    case ThomaeForm::A1:
      return {checked_ratio(P(c - a) * P(d - a), {pc, pd}, n),
              {{minus_n, a, a + b - c - d - ln + 1}, {a - c - ln + 1, a - d - ln + 1}, one, n}};
    case ThomaeForm::A2:
      return {checked_ratio(P(a) * P(c + d - a - b), {pc, pd}, n),
              {{minus_n, c - a, d - a}, {one - a - ln, c + d - a - b}, one, n}};
    case ThomaeForm::A2AsPrinted:
      // (d)_n multiplies instead of dividing.
      return {checked_ratio(P(a) * P(c + d - a - b), {pc}, n) * P(d),
              {{minus_n, c - a, d - a}, {one - a - ln, c + d - a - b}, one, n}};
    case ThomaeForm::A3:
      return {checked_ratio(P(c + d - a - b), {pc}, n),
              {{minus_n, d - a, d - b}, {d, c + d - a - b}, one, n}};
    case ThomaeForm::A4:
      return {sign * checked_ratio(P(a) * P(b), {pc, pd}, n),
              {{minus_n, one - c - ln, one - d - ln}, {one - a - ln, one - b - ln}, one, n}};
    case ThomaeForm::A5:
      return {sign * checked_ratio(P(d - a) * P(d - b), {pc, pd}, n),
              {{minus_n, one - d - ln, a + b - c - d - ln + 1},
               {a - d - ln + 1, b - d - ln + 1},
               one,
               n}};
    case ThomaeForm::A5AsPrinted:
      // Third upper parameter lacks the +1.
      return {sign * checked_ratio(P(d - a) * P(d - b), {pc, pd}, n),
              {{minus_n, one - d - ln, a + b - c - d - ln}, {a - d - ln + 1, b - d - ln + 1}, one, n}};
    case ThomaeForm::A6:
      return {checked_ratio(P(c - a), {pc}, n),
              {{minus_n, a, d - b}, {d, a - c - ln + 1}, one, n}};
    case ThomaeForm::A7:
      return {checked_ratio(P(c - a) * P(b), {pc, pd}, n),
              {{minus_n, d - b, one - c - ln}, {one - b - ln, a - c - ln + 1}, one, n}};
  }
  throw InvalidForm("unknown Thomae form");
}

ThomaeCheck verify_thomae(ThomaeForm form, const ThomaeParams& p) {
  ThomaeCheck check;
  try {
    check.lhs = eval_pfq(thomae_lhs(p));
  } catch (const SingularLowerParameter& e) {
    check.skipped = std::string("left side: ") + e.what();
    return check;
  }
  try {
    const ThomaeRewrite rhs = thomae_transform(form, p);
    check.rhs = rhs.prefactor * eval_pfq(rhs.spec);
  } catch (const SingularLowerParameter& e) {
    check.skipped = std::string("right side: ") + e.what();
    return check;
  }
  check.holds = check.lhs == check.rhs;
  return check;
}

ThomaeSuiteReport run_thomae_suite(ThomaeForm form, std::size_t trials, std::uint64_t seed) {
  constexpr std::size_t kMaxCounterexamples = 10;
  ThomaeSuiteReport report;
  report.form = form;
  report.seed = seed;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> degree(0, 8);
  std::uniform_int_distribution<long> numer(-9, 9);
  std::uniform_int_distribution<long> denom(1, 4);
  auto draw = [&] { return Rational(numer(rng), denom(rng)); };

  const std::size_t max_draws = 50 * trials + 100;
  for (std::size_t draws = 0; report.trials < trials && draws < max_draws; ++draws) {
    ThomaeParams p;
    p.n = static_cast<std::size_t>(degree(rng));
    p.a = draw();
    p.b = draw();
    p.c = draw();
    p.d = draw();
    const ThomaeCheck check = verify_thomae(form, p);
    if (check.skipped) {
      ++report.skipped;
      continue;
    }
    ++report.trials;
    if (check.holds) {
      ++report.holds;
    } else if (report.counterexamples.size() < kMaxCounterexamples) {
      report.counterexamples.push_back({p, check.lhs, check.rhs});
    }
  }
  return report;
}

}  // namespace hahnfir
