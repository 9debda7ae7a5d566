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
#include "hahnfir/shmaliy.hpp"
#include "oracles.hpp"

namespace hahnfir {
namespace {

TEST(ShmaliyTest, WindowFourOrderOne) {
  const CoefficientVector c = shmaliy_coefficients(Route::hyp_simple, 1, 4);
  ASSERT_EQ(c.taps.size(), 4);
  EXPECT_EQ(c.taps(0), Rational(7, 10));
  EXPECT_EQ(c.taps(1), Rational(2, 5));
  EXPECT_EQ(c.taps(2), Rational(1, 10));
  EXPECT_EQ(c.taps(3), Rational(-1, 5));
}

TEST(ShmaliyTest, OrderZeroIsAverage) {
  for (Route r : kShmaliyRoutes) {
    const CoefficientVector c = shmaliy_coefficients(r, 0, 6);
    for (const auto& t : c.taps) EXPECT_EQ(t, Rational(1, 6)) << to_string(r);
  }
}

TEST(ShmaliyTest, RoutesAgreeWithEachOther) {
  for (std::size_t N = 2; N <= 12; ++N) {
    for (std::size_t m = 0; m + 1 <= N && m <= 5; ++m) {
      const RouteAgreement a = compare_shmaliy_routes(m, N);
      EXPECT_TRUE(a.agree) << "m=" << m << " N=" << N << " " << a.first_mismatch.value_or("");
    }
  }
}

TEST(ShmaliyTest, PrintedPolynomials) {
  for (long N = 4; N <= 12; ++N) {
    for (int m = 0; m <= 2; ++m) {
      const CoefficientVector c = shmaliy_hankel(m, N);
      for (long n = 0; n < N; ++n) EXPECT_EQ(c.taps(n), oracle::printed_h(m, n, N)) << m << " " << N << " " << n;
    }
  }
}

TEST(ShmaliyTest, OrderThreeListedFormHasSignSlip) {
  for (long N = 4; N <= 12; ++N) {
    const CoefficientVector c = shmaliy_hankel(3, N);
    for (long n = 0; n < N; ++n) EXPECT_EQ(c.taps(n), oracle::h3_sign_corrected(n, N)) << N << " " << n;
    EXPECT_NE(c.taps(0), oracle::printed_h(3, 0, N));
  }
  // m = N-1 reproduces f(0): the taps are a unit impulse.
  const CoefficientVector d = shmaliy_hankel(3, 4);
  EXPECT_EQ(d.taps(0), Rational(1));
  EXPECT_EQ(oracle::printed_h(3, 0, 4), Rational(-1));
}

TEST(ShmaliyTest, LeastSquaresOracle) {
  for (long N = 2; N <= 14; ++N) {
    for (long m = 0; m < N && m <= 6; ++m) {
      const auto want = oracle::least_squares_taps(m, N);
      const CoefficientVector got = shmaliy_hyp_full(m, N);
      for (long n = 0; n < N; ++n) EXPECT_EQ(got.taps(n), want[n]) << m << " " << N;
    }
  }
}

TEST(ShmaliyTest, OrderTooLarge) {
  for (Route r : kShmaliyRoutes) EXPECT_THROW(shmaliy_coefficients(r, 4, 4), OrderTooLarge) << to_string(r);
  try {
    shmaliy_coefficients(Route::hyp_simple, 9, 4);
  } catch (const OrderTooLarge& e) {
    EXPECT_NE(std::string(e.what()).find("order exceeds window"), std::string::npos);
  }
  EXPECT_NO_THROW(shmaliy_coefficients(Route::hankel, 3, 4));
}

TEST(ShmaliyTest, Weight) {
  EXPECT_EQ(shmaliy_weight(0, 5), Rational(0));
  EXPECT_EQ(shmaliy_weight(3, 5), Rational(3, 10));
  Rational s(0);
  for (std::size_t n = 0; n < 7; ++n) s += shmaliy_weight(n, 7);
  EXPECT_EQ(s, Rational(1));
}

TEST(ShmaliyTest, NormOfOrderOne) {
  for (long N = 3; N <= 16; ++N) {
    const CoefficientVector c = shmaliy_hyp_simple(1, N);
    Rational s(0);
    for (long n = 0; n < N; ++n) s += shmaliy_weight(n, N) * c.taps(n) * c.taps(n);
    EXPECT_EQ(s, oracle::h1_norm(N));
    EXPECT_EQ(shmaliy_norm_squared(1, N), oracle::h1_norm(N));
  }
}

TEST(ShmaliyTest, PochhammerNormFormOnlyAtOrderOne) {
  for (std::size_t N = 4; N <= 10; ++N) {
    EXPECT_EQ(shmaliy_norm_squared_pochhammer_form(1, N), shmaliy_norm_squared(1, N));
    EXPECT_NE(shmaliy_norm_squared_pochhammer_form(2, N), shmaliy_norm_squared(2, N));
  }
}

TEST(ShmaliyTest, PropertyReport) {
  for (std::size_t N = 2; N <= 16; ++N) {
    for (std::size_t m = 0; m <= 5 && m < N; ++m) {
      const PropertyReport r = verify_shmaliy_properties(m, N);
      EXPECT_TRUE(r.all_required_hold()) << "m=" << m << " N=" << N;
    }
  }
  const PropertyReport r = verify_shmaliy_properties(3, 9);
  bool erratum_failed = false;
  for (const auto& c : r.checks) {
    if (c.kind == CheckKind::erratum && !c.holds) erratum_failed = true;
  }
  EXPECT_TRUE(erratum_failed);
}

}  // namespace
}  // namespace hahnfir
