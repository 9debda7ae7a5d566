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

#include "hahnfir/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hahnfir/exactnum.hpp"
#include "hahnfir/hahn_lowpass.hpp"
#include "hahnfir/hypergeom.hpp"
#include "hahnfir/identity_suite.hpp"
#include "hahnfir/io.hpp"
#include "hahnfir/shmaliy.hpp"
#include "hahnfir/shmaliy_transfer.hpp"

namespace hahnfir {

namespace {

/// Bad flags or input; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::string family = "shmaliy";
  std::optional<std::size_t> m;
  std::optional<std::size_t> N;
  std::string alpha = "0";
  std::string beta = "0";
  std::string route = "hyp-simple";
  std::string grid = "log";
  std::optional<double> omega_min;
  std::optional<double> omega_max;
  std::optional<std::size_t> points;
  std::optional<int> digits;
  std::string input;
  std::string output;
  std::string format = "csv";
  std::uint64_t seed = 7;
  std::optional<std::size_t> trials;
  std::string suite = "all";
  int low_digits = 9;
  int high_digits = 50;
  bool exact = false;
};

Rational parse_param(const std::string& name, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("--" + name + ": not a rational number: '" + text + "'");
  }
}

std::size_t require(const std::optional<std::size_t>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  return *v;
}

int default_digits(const RunConfig& cfg) {
  if (cfg.digits) return *cfg.digits;
  if (const char* env = std::getenv("HAHNFIR_DIGITS"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const int d = std::stoi(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
      return d;
    } catch (const std::exception&) {
      throw UsageError(std::string("HAHNFIR_DIGITS is not an integer: '") + env + "'");
    }
  }
  return kDefaultDigits;
}

Route parse_route(const std::string& name) {
  for (Route r : {Route::hankel, Route::recurrence, Route::hyp_full, Route::hyp_simple, Route::hahn_closed}) {
    if (to_string(r) == name) return r;
  }
  throw UsageError("unknown route '" + name + "'");
}

std::vector<double> make_grid(const RunConfig& cfg, double lo_default, double hi_default,
                              std::size_t points_default) {
  const double lo = cfg.omega_min.value_or(lo_default);
  const double hi = cfg.omega_max.value_or(hi_default);
  const std::size_t points = cfg.points.value_or(points_default);
  if (points < 1) throw UsageError("--points must be at least 1");
  if (!(lo > 0.0) || !(lo <= hi) || !(hi < 2.0 * std::numbers::pi)) {
    throw UsageError("grid needs 0 < omega-min <= omega-max < 2*pi");
  }
  return cfg.grid == "log" ? log_grid(lo, hi, points) : linear_grid(lo, hi, points);
}

/// Low-pass taps plus whether they agree with the n = 0 orthogonal
/// difference kernel, which is normalised by (alpha+beta+2)_N instead of
/// (alpha+2)_N.
std::pair<CoefficientVector, bool> lowpass_taps(const Rational& alpha, const Rational& beta, std::size_t N) {
  CoefficientVector c = lowpass_weights(alpha, beta, N);
  const Rational scale = pochhammer(alpha + beta + 2, N) / pochhammer(alpha + 2, N);
  const RationalVector kernel = orthogonal_difference_kernel(0, alpha, beta, N, SupportBounds::printed) * scale;
  const bool agree = kernel == c.taps && (!beta.is_zero() || c.sum() == lowpass_dc_gain(alpha, N));
  return {std::move(c), agree};
}

struct Taps {
  CoefficientVector coeffs;
  Metadata meta;
};

Taps family_taps(const RunConfig& cfg) {
  const std::size_t N = require(cfg.N, "--N");
  if (cfg.family == "shmaliy") {
    const std::size_t m = require(cfg.m, "--m");
    const Route route = parse_route(cfg.route);
    CoefficientVector c = shmaliy_coefficients(route, m, N);
    const RouteAgreement agreement = compare_shmaliy_routes(m, N);
    return {std::move(c),
            {{"family", "shmaliy"},
             {"m", std::to_string(m)},
             {"N", std::to_string(N)},
             {"route", to_string(route)},
             {"routes_agree", agreement.agree ? "yes" : "no"}}};
  }
  const Rational alpha = parse_param("alpha", cfg.alpha);
  const Rational beta = parse_param("beta", cfg.beta);
  auto [c, agree] = lowpass_taps(alpha, beta, N);
  return {std::move(c),
          {{"family", "hahn-lp"},
           {"alpha", alpha.to_string()},
           {"beta", beta.to_string()},
           {"N", std::to_string(N)},
           {"route", to_string(Route::weights)},
           {"routes_agree", agree ? "yes" : "no"}}};
}

void emit(const RunConfig& cfg, const std::string& payload, std::ostream& out) {
  if (cfg.output.empty() || cfg.output == "-") {
    out << payload;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot open output file '" + cfg.output + "'");
  file << payload;
  if (!file.flush()) throw UsageError("cannot write output file '" + cfg.output + "'");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int cmd_coeffs(const RunConfig& cfg, std::ostream& out) {
  const Taps t = family_taps(cfg);
  std::ostringstream os;
  if (cfg.format == "json") {
    os << dump(coefficients_json(t.coeffs, t.meta));
  } else {
    write_coefficients_csv(os, t.coeffs, t.meta);
  }
  emit(cfg, os.str(), out);
  return 0;
}

int cmd_response(const RunConfig& cfg, std::ostream& out) {
  const int digits = default_digits(cfg);
  if (digits < 9) throw UsageError("--digits must be at least 9");
  const std::vector<double> grid = make_grid(cfg, 1e-4, std::numbers::pi, 512);
  const std::size_t N = require(cfg.N, "--N");
  std::vector<ResponseSample> samples;
  Metadata meta;
  if (cfg.family == "shmaliy") {
    const std::size_t m = require(cfg.m, "--m");
    samples = frequency_response(m, N, grid, digits);
    meta = {{"family", "shmaliy"}, {"m", std::to_string(m)}, {"N", std::to_string(N)}};
  } else {
    const Rational alpha = parse_param("alpha", cfg.alpha);
    const Rational beta = parse_param("beta", cfg.beta);
    samples = lowpass_frequency_response(alpha, beta, N, grid, digits);
    meta = {{"family", "hahn-lp"}, {"alpha", alpha.to_string()}, {"beta", beta.to_string()},
            {"N", std::to_string(N)}};
  }
  meta.emplace_back("grid", cfg.grid);
  meta.emplace_back("digits", std::to_string(digits));
  std::ostringstream os;
  if (cfg.format == "json") {
    os << dump(response_json(samples, meta));
  } else {
    write_response_csv(os, samples, meta);
  }
  emit(cfg, os.str(), out);
  return 0;
}

int cmd_filter(const RunConfig& cfg, std::ostream& out) {
  if (cfg.input.empty()) throw UsageError("missing required flag --input");
  std::ifstream in(cfg.input);
  if (!in) throw UsageError("cannot open input file '" + cfg.input + "'");
  SignalRows rows;
  try {
    rows = read_signal_csv(in);
  } catch (const ParseError& e) {
    throw UsageError(cfg.input + ": " + e.what());
  }
  Taps t = family_taps(cfg);
  t.meta.emplace_back("path", cfg.exact ? "rational" : "float64");
  std::ostringstream os;
  if (cfg.exact) {
    const ExactSignal s = make_exact_signal(std::move(rows.values), rows.origin);
    write_signal_csv(os, apply_fir(s, t.coeffs), t.meta);
  } else {
    std::vector<double> values;
    values.reserve(rows.values.size());
    for (const auto& v : rows.values) values.push_back(v.to_double());
    const Signal s = make_signal(values, rows.origin);
    write_signal_csv(os, apply_fir(s, t.coeffs), t.meta);
  }
  emit(cfg, os.str(), out);
  return 0;
}

struct VerifyOutcome {
  Json report = Json::object();
  bool ok = true;
  std::vector<std::string> summary;
};

void verify_thomae(const RunConfig& cfg, VerifyOutcome& v) {
  const std::size_t trials = cfg.trials.value_or(200);
  Json forms = Json::array();
  for (ThomaeForm f : kStandardThomaeForms) {
    const ThomaeSuiteReport r = run_thomae_suite(f, trials, cfg.seed);
    v.ok = v.ok && r.all_hold() && r.holds >= trials;
    forms.push_back(to_json(r));
    v.summary.push_back(to_string(f) + ": " + std::to_string(r.holds) + "/" + std::to_string(r.trials) + " hold, " +
                        std::to_string(r.skipped) + " skipped");
  }
  Json printed = Json::array();
  for (ThomaeForm f : kPrintedVariantForms) {
    const ThomaeSuiteReport r = run_thomae_suite(f, trials, cfg.seed);
    printed.push_back(to_json(r));
    v.summary.push_back(to_string(f) + " (as printed, reported only): " + std::to_string(r.holds) + "/" +
                        std::to_string(r.trials) + " hold");
  }
  v.report["thomae"] = {{"forms", forms}, {"printed_variants", printed}};
}

void verify_shmaliy(VerifyOutcome& v) {
  Json props = Json::array();
  std::size_t failures = 0;
  for (std::size_t N = 2; N <= 16; ++N) {
    for (std::size_t m = 0; m <= 5 && m < N; ++m) {
      const PropertyReport r = verify_shmaliy_properties(m, N);
      if (!r.all_required_hold()) ++failures;
      props.push_back(to_json(r));
    }
  }
  Json routes = Json::array();
  std::size_t route_failures = 0;
  for (std::size_t N = 4; N <= 16; ++N) {
    for (std::size_t m = 0; m <= 6 && m + 2 <= N; ++m) {
      const RouteAgreement a = compare_shmaliy_routes(m, N);
      if (!a.agree) ++route_failures;
      Json item{{"m", m}, {"N", N}, {"agree", a.agree}};
      item["first_mismatch"] = a.first_mismatch ? Json(*a.first_mismatch) : Json(nullptr);
      routes.push_back(std::move(item));
    }
  }
  v.ok = v.ok && failures == 0 && route_failures == 0;
  v.report["shmaliy"] = {{"properties", props}, {"routes", routes}};
  v.summary.push_back("shmaliy properties: " + std::to_string(props.size() - failures) + "/" +
                      std::to_string(props.size()) + " pass");
  v.summary.push_back("shmaliy routes: " + std::to_string(routes.size() - route_failures) + "/" +
                      std::to_string(routes.size()) + " agree");
}

void verify_hahn_transforms(const RunConfig& cfg, VerifyOutcome& v) {
  const SuiteReport r = run_suite(cfg.trials.value_or(50), cfg.seed);
  const auto chain = identification_chain(6, 16);
  v.report["hahn-transforms"] = to_json(r);
  v.report["hahn-transforms-summary"] = {{"seed", r.seed},
                                         {"trials_per_record", r.trials_per_record},
                                         {"printed_records", r.printed_records},
                                         {"distinct_printed_records", r.distinct_printed_records},
                                         {"announced_records", 32},
                                         {"failing_printed_records", r.failing_printed_records()},
                                         {"degree_zero_holds", r.degree_zero_holds()}};
  v.report["identification-chain"] = to_json(chain);
  std::ostringstream table;
  table << "id           holds  fails  skips\n";
  for (const auto& rec : r.records) {
    std::string id = rec.id + (rec.conjecture ? "*" : "");
    id.resize(std::max<std::size_t>(id.size(), 11), ' ');
    table << id << ' ' << std::setw(6) << rec.holds << ' ' << std::setw(6) << rec.fails << ' ' << std::setw(6)
          << rec.skips << '\n';
  }
  table << "(* conjecture record, not part of the printed listing)";
  v.summary.push_back(table.str());
  for (const auto& c : chain) {
    v.summary.push_back("chain " + c.name + (c.printed ? "" : " (corrected)") + ": " +
                        (c.holds ? "holds" : "fails"));
  }
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.trials && *cfg.trials == 0) throw UsageError("--trials must be positive");
  VerifyOutcome v;
  const bool all = cfg.suite == "all";
  if (cfg.suite == "hahn-transforms" || all) {
    if (cfg.trials && *cfg.trials < 20) throw UsageError("hahn-transforms needs --trials >= 20");
  }
  v.report["seed"] = cfg.seed;
  if (cfg.suite == "thomae" || all) verify_thomae(cfg, v);
  if (cfg.suite == "shmaliy" || all) verify_shmaliy(v);
  if (cfg.suite == "hahn-transforms" || all) verify_hahn_transforms(cfg, v);
  v.report["passed"] = v.ok;
  emit(cfg, dump(v.report), out);
  std::ostream& table = cfg.output.empty() || cfg.output == "-" ? err : out;
  for (const auto& line : v.summary) table << line << '\n';
  return v.ok ? 0 : 1;
}

int cmd_cancel_report(const RunConfig& cfg, std::ostream& out) {
  if (cfg.low_digits < 9 || cfg.high_digits <= cfg.low_digits) {
    throw UsageError("need 9 <= --low-digits < --high-digits");
  }
  const std::size_t m = cfg.m.value_or(3);
  const std::size_t N = cfg.N.value_or(500);
  const std::vector<double> grid = make_grid(cfg, 1e-4, 1e-2, 64);
  const CancellationReport r = cancellation_report(m, N, grid, cfg.low_digits, cfg.high_digits);
  emit(cfg, dump(to_json(r)), out);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and multiprecision tools for Shmaliy and Hahn FIR filters", "hahnfir"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "shmaliy or hahn-lp")
        ->check(CLI::IsMember({"shmaliy", "hahn-lp"}));
    sub->add_option("--m", cfg.m, "polynomial order");
    sub->add_option("--N", cfg.N, "window length");
    sub->add_option("--alpha", cfg.alpha, "low-pass alpha (rational)");
    sub->add_option("--beta", cfg.beta, "low-pass beta (rational)");
  };
  auto add_output = [&](CLI::App* sub, bool with_format) {
    sub->add_option("--output,-o", cfg.output, "output path (default: stdout)");
    if (with_format) sub->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--grid", cfg.grid)->check(CLI::IsMember({"log", "linear"}));
    sub->add_option("--omega-min", cfg.omega_min, "lowest omega*T");
    sub->add_option("--omega-max", cfg.omega_max, "highest omega*T");
    sub->add_option("--points", cfg.points, "grid size");
  };

  auto* coeffs = app.add_subcommand("coeffs", "emit exact filter taps");
  add_family(coeffs);
  coeffs->add_option("--route", cfg.route, "Shmaliy construction route")
      ->check(CLI::IsMember({"hankel", "recurrence", "hyp-full", "hyp-simple", "hahn-closed"}));
  add_output(coeffs, true);

  auto* response = app.add_subcommand("response", "frequency response sweep");
  add_family(response);
  add_grid(response);
  response->add_option("--digits", cfg.digits, "working precision (env HAHNFIR_DIGITS, default 64)");
  add_output(response, true);

  auto* filter = app.add_subcommand("filter", "apply a filter to a signal file");
  add_family(filter);
  filter->add_option("--route", cfg.route)
      ->check(CLI::IsMember({"hankel", "recurrence", "hyp-full", "hyp-simple", "hahn-closed"}));
  filter->add_option("--input,-i", cfg.input, "signal CSV")->required();
  filter->add_flag("--exact", cfg.exact, "filter in exact rational arithmetic");
  add_output(filter, false);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", cfg.suite)->check(CLI::IsMember({"thomae", "shmaliy", "hahn-transforms", "all"}));
  verify->add_option("--seed", cfg.seed);
  verify->add_option("--trials", cfg.trials);
  add_output(verify, false);

  auto* cancel = app.add_subcommand("cancel-report", "closed-form cancellation at two precisions");
  cancel->add_option("--m", cfg.m, "polynomial order (default 3)");
  cancel->add_option("--N", cfg.N, "window length (default 500)");
  cancel->add_option("--low-digits", cfg.low_digits);
  cancel->add_option("--high-digits", cfg.high_digits);
  add_grid(cancel);
  add_output(cancel, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*coeffs) return cmd_coeffs(cfg, out);
    if (*response) return cmd_response(cfg, out);
    if (*filter) return cmd_filter(cfg, out);
    if (*verify) return cmd_verify(cfg, out, err);
    if (*cancel) return cmd_cancel_report(cfg, out);
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const std::invalid_argument*>(&e) == nullptr &&
        dynamic_cast<const std::domain_error*>(&e) == nullptr) {
      err << "hahnfir: internal error: " << e.what() << '\n';
      return 1;
    }
    err << "hahnfir: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "hahnfir: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace hahnfir
