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
#include "hahnfir/identity_suite.hpp"
#include "oracles.hpp"

namespace hahnfir {
namespace {

const TransformRecord& record(const std::string& id) {
  for (const auto& r : catalog()) {
    if (r.id == id) return r;
  }
  throw std::out_of_range(id);
}

TEST(AffineExprTest, Parse) {
  const Bindings b{Rational(2), Rational(5), Rational(1, 2), Rational(-3), Rational(7)};
  EXPECT_EQ(AffineExpr::parse("-n-alpha-beta-1").eval(b), Rational(-1, 2));
  EXPECT_EQ(AffineExpr::parse("2*n + alpha").eval(b), Rational(9, 2));
  EXPECT_EQ(AffineExpr::parse("N").eval(b), Rational(7));
  EXPECT_EQ(AffineExpr::parse("x-n-N-beta-1").eval(b), Rational(-2));
  EXPECT_THROW(AffineExpr::parse("n+gamma"), InvalidForm);
  EXPECT_THROW(AffineExpr::parse("n+"), InvalidForm);
  EXPECT_THROW(AffineExpr::parse(""), InvalidForm);
}

TEST(CatalogTest, Listing) {
  const auto printed = printed_catalog();
  ASSERT_EQ(printed.size(), 32u);
  EXPECT_EQ(printed.front().id, "1");
  EXPECT_EQ(printed.front().target.argument.text(), "-n-alpha-beta-1");
  EXPECT_EQ(printed.front().target.beta.text(), "-x-alpha-1-n");
  EXPECT_TRUE(printed.front().prefactor.numerator.empty());
  EXPECT_FALSE(record("7").source_note.empty());
  EXPECT_TRUE(record("4-shifted").conjecture);
  const auto& r4 = record("4");
  EXPECT_EQ(r4.prefactor.numerator.size(), 2u);
  EXPECT_EQ(r4.target.argument.text(), "x-N-beta");
  EXPECT_EQ(r4.target.N.text(), "-N-alpha-beta-2");
}

TEST(VerifyTransformTest, DegreeZero) {
  for (const auto& r : catalog()) {
    const TransformCheck c = verify_transform(r, 0, Rational(3), Rational(1), Rational(2), Rational(5));
    ASSERT_FALSE(c.skipped) << r.id;
    EXPECT_TRUE(c.holds) << r.id;
    EXPECT_EQ(c.lhs, Rational(1));
  }
}

TEST(VerifyTransformTest, UsedRecordFailsShiftedHolds) {
  // alpha = 1, beta = 0, N = -1-N', x = -1-n' for small N', n'.
  for (long Np = 3; Np <= 7; ++Np) {
    for (long np = 0; np < Np; ++np) {
      const Rational x(-1 - np), N(-1 - Np);
      const TransformCheck printed = verify_transform(record("4"), 1, x, Rational(1), Rational(0), N);
      const TransformCheck shifted = verify_transform(record("4-shifted"), 1, x, Rational(1), Rational(0), N);
      ASSERT_FALSE(printed.skipped);
      ASSERT_FALSE(shifted.skipped);
      EXPECT_FALSE(printed.holds);
      EXPECT_TRUE(shifted.holds);
      mpq_class q;
      ASSERT_TRUE(oracle::hahn(1, x.value(), 1, 0, N.value(), q));
      EXPECT_EQ(shifted.lhs, Rational(q));
    }
  }
}

TEST(VerifyTransformTest, SkipReasons) {
  // Q_n with lower (-N)_k vanishing on the left side.
  const TransformCheck c = verify_transform(record("1"), 3, Rational(1), Rational(0), Rational(0), Rational(1));
  ASSERT_TRUE(c.skipped);
  EXPECT_NE(c.skipped->find("left"), std::string::npos);
}

TEST(SuiteTest, ReportShape) {
  const SuiteReport r = run_suite(50, 7);
  EXPECT_EQ(r.printed_records, 32u);
  EXPECT_EQ(r.distinct_printed_records, 31u);
  EXPECT_GE(r.failing_printed_records(), 1u);
  EXPECT_TRUE(r.degree_zero_holds());
  for (const auto& rec : r.records) {
    EXPECT_EQ(rec.holds + rec.fails + rec.skips, 50u) << rec.id;
    EXPECT_EQ(rec.fails > 0, rec.first_counterexample.has_value());
    if (rec.first_counterexample) EXPECT_NE(rec.first_counterexample->lhs, rec.first_counterexample->rhs);
  }
  EXPECT_GT(r.records[3].fails, 0u);
  EXPECT_EQ(r.records[0].fails, 0u);
  EXPECT_EQ(r.records.back().fails, 0u);
}

TEST(SuiteTest, Deterministic) {
  const SuiteReport a = run_suite(20, 3);
  const SuiteReport b = run_suite(20, 3);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].holds, b.records[i].holds);
    EXPECT_EQ(a.records[i].skips, b.records[i].skips);
  }
  EXPECT_THROW(run_suite(19, 3), std::invalid_argument);
}

TEST(ChainTest, Classification) {
  const auto chain = identification_chain(5, 12);
  ASSERT_EQ(chain.size(), 4u);
  EXPECT_EQ(chain[0].name, "identification");
  EXPECT_TRUE(chain[0].holds);
  EXPECT_FALSE(chain[1].holds);
  EXPECT_FALSE(chain[2].holds);
  EXPECT_TRUE(chain[3].holds);
  EXPECT_FALSE(chain[3].printed);
  const auto simplified = identification_chain(1, 4)[2];
  ASSERT_TRUE(simplified.first_mismatch);
}

TEST(ChainTest, SimplifiedFormAtWindowFour) {
  // The simplified form gives -3 at n = 0 for m = 1, N = 4, against 7/10.
  mpq_class q;
  ASSERT_TRUE(oracle::hahn(1, 4, 0, 1, 2, q));
  EXPECT_EQ(Rational(2 * 6, 4 * 5) * Rational(q), Rational(-3));
}

}  // namespace
}  // namespace hahnfir
