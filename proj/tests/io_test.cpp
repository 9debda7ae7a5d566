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

#include <sstream>

#include <gtest/gtest.h>

#include "hahnfir/io.hpp"

namespace hahnfir {
namespace {

TEST(FormatTest, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(-0.2), "-0.2");
  EXPECT_EQ(format_double(1e-4), "1e-04");
  EXPECT_EQ(format_double(3.0), "3");
}

TEST(CsvTest, Coefficients) {
  std::ostringstream os;
  write_coefficients_csv(os, shmaliy_hyp_simple(1, 4), {{"family", "shmaliy"}});
  EXPECT_EQ(os.str(),
            "# family=shmaliy\n"
            "n,numerator,denominator,float64\n"
            "0,7,10,0.7\n"
            "1,2,5,0.4\n"
            "2,1,10,0.1\n"
            "3,-1,5,-0.2\n");
}

TEST(CsvTest, ReadSignalForms) {
  std::istringstream two("# comment\nindex,value\n5,0.5\n6,-1/3\n\n7,2e1\n");
  const SignalRows a = read_signal_csv(two);
  EXPECT_EQ(a.origin, 5);
  ASSERT_EQ(a.values.size(), 3u);
  EXPECT_EQ(a.values[1], Rational(-1, 3));
  EXPECT_EQ(a.values[2], Rational(20));
  std::istringstream one("1\n2\n3\n");
  EXPECT_EQ(read_signal_csv(one).values.size(), 3u);
}

TEST(CsvTest, ReadSignalErrorsNameTheLine) {
  std::istringstream bad("1\n2\nx\n");
  try {
    read_signal_csv(bad);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  std::istringstream gap("0,1\n2,1\n");
  EXPECT_THROW(read_signal_csv(gap), ParseError);
  std::istringstream mixed("0,1\n3\n");
  EXPECT_THROW(read_signal_csv(mixed), ParseError);
  std::istringstream three("0,1,2\n");
  EXPECT_THROW(read_signal_csv(three), ParseError);
}

TEST(CsvTest, ExactSignal) {
  std::ostringstream os;
  write_signal_csv(os, make_exact_signal({Rational(1, 3), Rational(2)}, 4), {});
  EXPECT_EQ(os.str(), "index,value\n4,1/3\n5,2/1\n");
  std::istringstream back(os.str());
  const SignalRows rows = read_signal_csv(back);
  EXPECT_EQ(rows.origin, 4);
  EXPECT_EQ(rows.values[0], Rational(1, 3));
}

TEST(CsvTest, Response) {
  const std::vector<double> grid = {0.5};
  std::ostringstream os;
  write_response_csv(os, frequency_response(1, 4, grid, 12), {});
  const std::string s = os.str();
  EXPECT_EQ(s.substr(0, s.find('\n')), "omega_t,re,im,abs,arg,digits");
  EXPECT_EQ(s.back(), '\n');
  EXPECT_NE(s.find(",12\n"), std::string::npos);
}

TEST(JsonTest, SuiteSchema) {
  const Json j = to_json(run_suite(20, 7));
  ASSERT_TRUE(j.is_array());
  for (const auto& r : j) {
    for (const char* k : {"id", "holds", "fails", "skips", "first_counterexample"}) EXPECT_TRUE(r.contains(k)) << k;
    if (!r["first_counterexample"].is_null()) {
      for (const char* k : {"n", "x", "alpha", "beta", "N", "lhs", "rhs"}) {
        EXPECT_TRUE(r["first_counterexample"].contains(k)) << k;
      }
    }
  }
}

TEST(JsonTest, ThomaeSchema) {
  const Json j = to_json(run_thomae_suite(ThomaeForm::A5AsPrinted, 30, 7));
  for (const char* k : {"form", "trials", "holds", "skipped", "seed", "counterexamples"}) EXPECT_TRUE(j.contains(k));
  ASSERT_FALSE(j["counterexamples"].empty());
  EXPECT_TRUE(j["counterexamples"][0]["lhs"].is_string());
  EXPECT_EQ(j["form"], "A5-printed");
}

TEST(JsonTest, RationalsAsStrings) {
  EXPECT_EQ(to_json(Rational(-3, 4)), "-3/4");
  const Json z = to_json(MPComplex(Rational(1, 2), 10));
  EXPECT_EQ(z["digits"], 10);
  EXPECT_EQ(z["re"], "5.000000000e-01");
}

}  // namespace
}  // namespace hahnfir
