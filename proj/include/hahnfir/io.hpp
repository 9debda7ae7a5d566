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

#ifndef HAHNFIR_IO_HPP_
#define HAHNFIR_IO_HPP_

#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hahnfir/hahn_lowpass.hpp"
#include "hahnfir/hypergeom.hpp"
#include "hahnfir/identity_suite.hpp"
#include "hahnfir/shmaliy.hpp"
#include "hahnfir/shmaliy_transfer.hpp"

namespace hahnfir {

using Json = nlohmann::ordered_json;
using Metadata = std::vector<std::pair<std::string, std::string>>;

/// Shortest round-trip decimal form of a double.
std::string format_double(double x);

Json to_json(const Rational& q);
Json to_json(const MPComplex& z);
Json to_json(const ThomaeSuiteReport& r);
Json to_json(const SuiteReport& r);
Json to_json(const std::vector<ChainCheck>& chain);
Json to_json(const PropertyReport& r);
Json to_json(const CancellationReport& r);
Json to_json(const UnbiasednessReport& r);

/// `# key=value` lines, then `n,numerator,denominator,float64`.
void write_coefficients_csv(std::ostream& os, const CoefficientVector& c, const Metadata& meta);
Json coefficients_json(const CoefficientVector& c, const Metadata& meta);

/// `omega_t,re,im,abs,arg,digits`.
void write_response_csv(std::ostream& os, std::span<const ResponseSample> samples, const Metadata& meta);
Json response_json(std::span<const ResponseSample> samples, const Metadata& meta);

/// A malformed input row; `line` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct SignalRows {
  long origin = 0;
  std::vector<Rational> values;
};

/// Reads `index,value` rows (consecutive indices) or a single value column.
/// Blank lines and `#` lines are skipped; an optional header row is allowed.
/// Values are parsed exactly. Throws ParseError.
SignalRows read_signal_csv(std::istream& is);

void write_signal_csv(std::ostream& os, const Signal& s, const Metadata& meta);
/// `index,value` with values written as "p/q", which read_signal_csv accepts.
void write_signal_csv(std::ostream& os, const ExactSignal& s, const Metadata& meta);

}  // namespace hahnfir

#endif  // HAHNFIR_IO_HPP_
