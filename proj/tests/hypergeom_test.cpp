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

#include <gtest/gtest.h>

#include "hahnfir/errors.hpp"
#include "hahnfir/exactnum.hpp"
#include "hahnfir/hypergeom.hpp"

namespace hahnfir {
namespace {

TEST(PfqTest, Coefficients) {
  const std::vector<Rational> up = {Rational(-2), Rational(3)};
  const std::vector<Rational> lo = {Rational(5)};
  const auto c = pfq_coefficients(up, lo, 2);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0], Rational(1));
  EXPECT_EQ(c[1], Rational(-6, 5));
  EXPECT_EQ(c[2], Rational(2, 5));
}

TEST(PfqTest, ChuVandermonde) {
  // 2F1(-n, b; c; 1) = (c-b)_n / (c)_n
  for (long n = 0; n < 7; ++n) {
    const PFQSpec<Rational> s{{Rational(-n), Rational(5, 2)}, {Rational(7, 3)}, Rational(1), static_cast<std::size_t>(n)};
    EXPECT_EQ(eval_pfq(s), pochhammer(Rational(7, 3) - Rational(5, 2), n) / pochhammer(Rational(7, 3), n));
  }
}

TEST(PfqTest, PfaffSaalschutz) {
  // 3F2(-n, a, b; c, 1+a+b-c-n; 1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n)
  const Rational a(2, 3), b(-5, 4), c(9, 7);
  for (long n = 0; n < 6; ++n) {
    const auto un = static_cast<std::size_t>(n);
    const PFQSpec<Rational> s{{Rational(-n), a, b}, {c, 1 + a + b - c - n}, Rational(1), un};
    EXPECT_EQ(eval_pfq(s), pochhammer(c - a, un) * pochhammer(c - b, un) / (pochhammer(c, un) * pochhammer(c - a - b, un)));
  }
}

TEST(PfqTest, SingularLowerParameter) {
  const std::vector<Rational> up = {Rational(-3), Rational(1)};
  const std::vector<Rational> lo = {Rational(-1)};
  try {
    pfq_coefficients(up, lo, 3);
    FAIL() << "expected SingularLowerParameter";
  } catch (const SingularLowerParameter& e) {
    EXPECT_EQ(e.index(), 2u);
    EXPECT_EQ(e.parameter(), Rational(-1));
  }
  // Upper (-1)_k vanishes before the lower one does: still rejected.
  const std::vector<Rational> up2 = {Rational(-1)};
  const std::vector<Rational> lo2 = {Rational(-2)};
  EXPECT_THROW(pfq_coefficients(up2, lo2, 3), SingularLowerParameter);
  EXPECT_NO_THROW(pfq_coefficients(up2, lo2, 2));
}

TEST(PfqTest, ScalarTypesAgree) {
  const PFQSpec<Rational> exact{{Rational(-4), Rational(3, 2)}, {Rational(5, 2)}, Rational(1, 3), 4};
  const PFQSpec<double> fp{exact.upper, exact.lower, 1.0 / 3.0, 4};
  EXPECT_NEAR(eval_pfq(fp), eval_pfq(exact).to_double(), 1e-14);
  const PFQSpec<MPComplex> mp{exact.upper, exact.lower, MPComplex(Rational(1, 3), 40), 4};
  EXPECT_NEAR(eval_pfq(mp).real().to_double(), eval_pfq(exact).to_double(), 1e-15);
}

TEST(ThomaeTest, FormTags) {
  for (ThomaeForm f : kStandardThomaeForms) EXPECT_EQ(parse_thomae_form(to_string(f)), f);
  EXPECT_EQ(parse_thomae_form("A5-printed"), ThomaeForm::A5AsPrinted);
  EXPECT_THROW(parse_thomae_form("A9"), InvalidForm);
}

TEST(ThomaeTest, StandardFormsHoldAtFixedPoint) {
  const ThomaeParams p{3, Rational(1, 2), Rational(-7, 3), Rational(5, 4), Rational(11, 6)};
  for (ThomaeForm f : kStandardThomaeForms) {
    const ThomaeCheck c = verify_thomae(f, p);
    ASSERT_FALSE(c.skipped) << to_string(f) << ": " << *c.skipped;
    EXPECT_TRUE(c.holds) << to_string(f) << " lhs " << c.lhs << " rhs " << c.rhs;
  }
}

TEST(ThomaeTest, SuiteSeeded) {
  for (ThomaeForm f : kStandardThomaeForms) {
    const ThomaeSuiteReport r = run_thomae_suite(f, 200, 7);
    EXPECT_EQ(r.trials, 200u) << to_string(f);
    EXPECT_TRUE(r.all_hold()) << to_string(f);
    EXPECT_TRUE(r.counterexamples.empty());
  }
}

TEST(ThomaeTest, PrintedVariantsAreReportedFailing) {
  for (ThomaeForm f : kPrintedVariantForms) {
    const ThomaeSuiteReport r = run_thomae_suite(f, 100, 7);
    EXPECT_LT(r.holds, r.trials) << to_string(f);
    EXPECT_FALSE(r.counterexamples.empty());
    EXPECT_LE(r.counterexamples.size(), 10u);
  }
}

TEST(ThomaeTest, Deterministic) {
  const auto a = run_thomae_suite(ThomaeForm::A4, 50, 99);
  const auto b = run_thomae_suite(ThomaeForm::A4, 50, 99);
  EXPECT_EQ(a.holds, b.holds);
  EXPECT_EQ(a.skipped, b.skipped);
}

TEST(ThomaeTest, VanishingPrefactorDenominatorIsSkipped) {
  const ThomaeParams p{3, Rational(1), Rational(2), Rational(-1), Rational(5)};
  const ThomaeCheck c = verify_thomae(ThomaeForm::A2, p);
  EXPECT_TRUE(c.skipped.has_value());
}

}  // namespace
}  // namespace hahnfir
