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

#include "hahnfir/io.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string_view>

namespace hahnfir {

std::string format_double(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

Json to_json(const Rational& q) { return q.to_string(); }

Json to_json(const MPComplex& z) {
  return Json{{"re", z.real().to_string()}, {"im", z.imag().to_string()}, {"digits", z.digits()}};
}

Json to_json(const ThomaeSuiteReport& r) {
  Json ce = Json::array();
  for (const auto& c : r.counterexamples) {
    ce.push_back({{"params",
                   {{"n", c.params.n},
                    {"a", to_json(c.params.a)},
                    {"b", to_json(c.params.b)},
                    {"c", to_json(c.params.c)},
                    {"d", to_json(c.params.d)}}},
                  {"lhs", to_json(c.lhs)},
                  {"rhs", to_json(c.rhs)}});
  }
  return Json{{"form", to_string(r.form)}, {"trials", r.trials}, {"holds", r.holds},
              {"skipped", r.skipped},      {"seed", r.seed},     {"counterexamples", ce}};
}

Json to_json(const SuiteReport& r) {
  Json out = Json::array();
  for (const auto& rec : r.records) {
    Json item{{"id", rec.id}, {"holds", rec.holds}, {"fails", rec.fails}, {"skips", rec.skips}};
    if (rec.first_counterexample) {
      const auto& c = *rec.first_counterexample;
      item["first_counterexample"] = {{"n", c.n},
                                      {"x", to_json(c.x)},
                                      {"alpha", to_json(c.alpha)},
                                      {"beta", to_json(c.beta)},
                                      {"N", to_json(c.N)},
                                      {"lhs", to_json(c.lhs)},
                                      {"rhs", to_json(c.rhs)}};
    } else {
      item["first_counterexample"] = nullptr;
    }
    item["conjecture"] = rec.conjecture;
    item["degree_zero_holds"] = rec.degree_zero_holds;
    out.push_back(std::move(item));
  }
  return out;
}

Json to_json(const std::vector<ChainCheck>& chain) {
  Json out = Json::array();
  for (const auto& c : chain) {
    Json item{{"name", c.name}, {"formula", c.formula}, {"printed", c.printed}, {"holds", c.holds},
              {"checked", c.checked}};
    if (c.first_mismatch) {
      item["first_mismatch"] = {{"m", (*c.first_mismatch)[0]},
                                {"N", (*c.first_mismatch)[1]},
                                {"n", (*c.first_mismatch)[2]},
                                {"expected", to_json(c.expected)},
                                {"got", to_json(c.got)}};
    } else {
      item["first_mismatch"] = nullptr;
    }
    out.push_back(std::move(item));
  }
  return out;
}

Json to_json(const PropertyReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"kind", c.kind == CheckKind::required ? "required" : "erratum"},
                      {"lhs", to_json(c.lhs)},
                      {"rhs", to_json(c.rhs)},
                      {"holds", c.holds}});
  }
  return Json{{"m", r.order}, {"N", r.window}, {"required_hold", r.all_required_hold()}, {"checks", checks}};
}

Json to_json(const CancellationReport& r) {
  Json points = Json::array();
  for (const auto& p : r.points) {
    points.push_back({{"omega_t", p.omega_t},
                      {"low", to_json(p.low)},
                      {"high", to_json(p.high)},
                      {"oracle", to_json(p.oracle)},
                      {"rel_err_low", p.rel_err_low},
                      {"rel_err_high", p.rel_err_high}});
  }
  return Json{{"m", r.order},
              {"N", r.window},
              {"low_digits", r.low_digits},
              {"high_digits", r.high_digits},
              {"max_rel_err_low", r.max_rel_err_low},
              {"max_rel_err_high", r.max_rel_err_high},
              {"points", points}};
}

Json to_json(const UnbiasednessReport& r) {
  return Json{{"alpha", to_json(r.alpha)},
              {"N", r.window},
              {"quad_points", r.quad_points},
              {"I1", {{"re", r.integral_h.real()}, {"im", r.integral_h.imag()}}},
              {"I2", {{"re", r.integral_h_sq.real()}, {"im", r.integral_h_sq.imag()}}},
              {"oracle_I1", r.oracle_h},
              {"oracle_I2", r.oracle_h_sq},
              {"first_tap", to_json(r.first_tap)},
              {"tap_energy", to_json(r.tap_energy)},
              {"integrals_vanish", r.integrals_vanish}};
}

namespace {

void write_meta(std::ostream& os, const Metadata& meta) {
  for (const auto& [k, v] : meta) os << "# " << k << '=' << v << '\n';
}

Json meta_json(const Metadata& meta) {
  Json out = Json::object();
  for (const auto& [k, v] : meta) out[k] = v;
  return out;
}

}  // namespace

void write_coefficients_csv(std::ostream& os, const CoefficientVector& c, const Metadata& meta) {
  write_meta(os, meta);
  os << "n,numerator,denominator,float64\n";
  for (Eigen::Index n = 0; n < c.taps.size(); ++n) {
    const Rational& t = c.taps(n);
    os << n << ',' << t.numerator().get_str() << ',' << t.denominator().get_str() << ','
       << format_double(t.to_double()) << '\n';
  }
}

Json coefficients_json(const CoefficientVector& c, const Metadata& meta) {
  Json taps = Json::array();
  for (const auto& t : c.taps) taps.push_back(to_json(t));
  return Json{{"meta", meta_json(meta)}, {"taps", taps}, {"sum", to_json(c.sum())}};
}

void write_response_csv(std::ostream& os, std::span<const ResponseSample> samples, const Metadata& meta) {
  write_meta(os, meta);
  os << "omega_t,re,im,abs,arg,digits\n";
  for (const auto& s : samples) {
    os << format_double(s.omega_t) << ',' << s.value.real().to_string() << ',' << s.value.imag().to_string() << ','
       << s.magnitude.to_string() << ',' << s.phase.to_string() << ',' << s.digits << '\n';
  }
}

Json response_json(std::span<const ResponseSample> samples, const Metadata& meta) {
  Json rows = Json::array();
  for (const auto& s : samples) {
    rows.push_back({{"omega_t", s.omega_t},
                    {"value", to_json(s.value)},
                    {"abs", s.magnitude.to_string()},
                    {"arg", s.phase.to_string()},
                    {"direct_fallback", s.direct_fallback}});
  }
  return Json{{"meta", meta_json(meta)}, {"samples", rows}};
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

SignalRows read_signal_csv(std::istream& is) {
  SignalRows rows;
  std::string line;
  std::size_t lineno = 0;
  bool seen_data = false;
  bool seen_header = false;
  int columns = 0;
  long expected_index = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const std::string_view s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    const auto comma = s.find(',');
    const int cols = comma == std::string_view::npos ? 1 : 2;
    if (cols == 2 && s.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError(lineno, "expected 'index,value' or a single value");
    }
    if (!seen_data && !seen_header && (s == "value" || s == "index,value")) {
      seen_header = true;
      continue;
    }
    if (columns != 0 && cols != columns) throw ParseError(lineno, "column count changed");
    columns = cols;
    try {
      if (cols == 1) {
        rows.values.push_back(Rational::parse(s));
      } else {
        const Rational index = Rational::parse(s.substr(0, comma));
        if (!index.is_integer()) throw ParseError(lineno, "index is not an integer");
        const long k = index.to_long();
        if (!seen_data) {
          rows.origin = k;
          expected_index = k;
        }
        if (k != expected_index) throw ParseError(lineno, "indices must be consecutive");
        ++expected_index;
        rows.values.push_back(Rational::parse(s.substr(comma + 1)));
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    } catch (const std::range_error& e) {
      throw ParseError(lineno, e.what());
    }
    seen_data = true;
  }
  if (is.bad()) throw std::runtime_error("read error");
  return rows;
}

void write_signal_csv(std::ostream& os, const Signal& s, const Metadata& meta) {
  write_meta(os, meta);
  os << "index,value\n";
  for (Eigen::Index i = 0; i < s.samples.size(); ++i) {
    os << s.origin + i << ',' << format_double(s.samples(i)) << '\n';
  }
}

void write_signal_csv(std::ostream& os, const ExactSignal& s, const Metadata& meta) {
  write_meta(os, meta);
  os << "index,value\n";
  for (Eigen::Index i = 0; i < s.samples.size(); ++i) os << s.origin + i << ',' << s.samples(i).to_string() << '\n';
}

}  // namespace hahnfir
