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

#include "hahnfir/identity_suite.hpp"

#include <algorithm>
#include <cctype>
#include <future>
#include <random>
#include <stdexcept>

#include "hahnfir/errors.hpp"
#include "hahnfir/exactnum.hpp"
#include "hahnfir/orthopoly.hpp"
#include "hahnfir/shmaliy.hpp"

namespace hahnfir {

namespace {

constexpr std::array<std::string_view, 6> kVariables = {"", "n", "x", "alpha", "beta", "N"};

std::size_t variable_slot(std::string_view name) {
  for (std::size_t i = 1; i < kVariables.size(); ++i) {
    if (kVariables[i] == name) return i;
  }
  return 0;
}

}  // namespace

AffineExpr AffineExpr::parse(std::string_view text) {
  AffineExpr e;
  e.text_ = std::string(text);
  auto bad = [&] { return InvalidForm("bad affine expression '" + std::string(text) + "'"); };
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw bad();
  std::size_t i = 0;
  while (i < s.size()) {
    long sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw bad();
    }
    const std::size_t start = i;
    while (i < s.size() && s[i] != '+' && s[i] != '-') ++i;
    const std::string_view term(s.data() + start, i - start);
    if (term.empty()) throw bad();
    Rational k(sign);
    std::string_view name = term;
    if (const auto star = term.find('*'); star != std::string_view::npos) {
      k *= Rational::parse(term.substr(0, star));
      name = term.substr(star + 1);
    }
    if (std::isdigit(static_cast<unsigned char>(name.front()))) {
      if (name != term) throw bad();
      e.coeff_[0] += k * Rational::parse(name);
      continue;
    }
    const std::size_t slot = variable_slot(name);
    if (slot == 0) throw bad();
    e.coeff_[slot] += k;
  }
  return e;
}

Rational AffineExpr::eval(const Bindings& b) const {
  return coeff_[0] + coeff_[1] * b.n + coeff_[2] * b.x + coeff_[3] * b.alpha + coeff_[4] * b.beta +
         coeff_[5] * b.N;
}

namespace {

Prefactor make_prefactor(bool alternating, std::vector<std::string_view> num,
                         std::vector<std::string_view> den) {
  Prefactor p;
  p.alternating = alternating;
  for (auto t : num) p.numerator.push_back(AffineExpr::parse(t));
  for (auto t : den) p.denominator.push_back(AffineExpr::parse(t));
  return p;
}

TransformRecord make_record(std::string id, const Prefactor& pre, std::string_view y, std::string_view a,
                            std::string_view b, std::string_view M, std::string note = {},
                            bool conjecture = false) {
  return {std::move(id), pre,
          HahnTarget{AffineExpr::parse(y), AffineExpr::parse(a), AffineExpr::parse(b), AffineExpr::parse(M)},
          std::move(note), conjecture};
}

std::vector<TransformRecord> build_catalog() {
  const Prefactor one = make_prefactor(false, {}, {});
  const Prefactor p1 = make_prefactor(false, {"-n-beta", "-N-n-alpha-beta-1"}, {"alpha+1", "-N"});
  const Prefactor p2 = make_prefactor(false, {"n+alpha+beta+1", "x-n-N-beta"}, {"alpha+1", "-N"});
  const Prefactor p3 = make_prefactor(false, {"x-n-N-beta"}, {"alpha+1"});
  const Prefactor p4 = make_prefactor(true, {"n+alpha+beta+1", "-x"}, {"alpha+1", "-N"});
  const Prefactor p5 = make_prefactor(true, {"-N-n-alpha-beta-1", "x-N"}, {"alpha+1", "-N"});
  const Prefactor p6 = make_prefactor(false, {"-n-beta"}, {"alpha+1"});
  const Prefactor p7 = make_prefactor(false, {"-n-beta", "-x"}, {"alpha+1", "-N"});

  std::vector<TransformRecord> c;
  c.push_back(make_record("1", one, "-n-alpha-beta-1", "alpha", "-x-alpha-1-n", "N"));
  c.push_back(make_record("2", one, "x", "-N-1", "n+alpha+beta+1+N-n", "-alpha-1"));
  c.push_back(make_record("3", one, "-n-alpha-beta-1", "-N-1", "-x+N-n", "-alpha-1"));
  c.push_back(make_record("4", p1, "x-N-beta", "beta", "alpha", "-N-alpha-beta-2",
                          "form used to identify the Shmaliy polynomial"));
  c.push_back(make_record("5", p1, "-n-alpha-beta-1", "beta", "N-x-1-n", "-N-alpha-beta-2"));
  c.push_back(make_record("6", p1, "-N+x-beta", "N+alpha+beta+1", "-N-1", "-beta-1"));
  c.push_back(make_record("7", p1, "-N+x-beta", "N+alpha+beta+1", "-N-1", "-beta-1",
                          "duplicate of record 6 as printed"));
  c.push_back(make_record("8", p1, "-n-alpha-beta-1", "N+alpha+beta+1", "-n-x-alpha-2", "-beta-1"));
  c.push_back(make_record("9", p2, "N+n+alpha+beta+1", "-2*n-alpha-beta-1", "alpha", "N+n-x+beta"));
  c.push_back(make_record("10", p2, "n+beta", "-2*n-alpha-beta-1", "-N-1", "N+n-x+beta"));
  c.push_back(make_record("11", p2, "N+n+alpha+beta+1", "x-n-N-beta-1", "N-n-x", "2*n+alpha+beta"));
  c.push_back(make_record("12", p2, "n+beta", "x-n-N-beta-1", "-n-x-alpha-1", "2*n+alpha+beta"));
  c.push_back(make_record("13", p3, "N-x", "-N-1", "-2*n-alpha-beta-1", "N+n-x+beta"));
  c.push_back(make_record("14", p3, "N+n+alpha+beta+1", "-N-1", "x-n", "N+n-x+beta"));
  c.push_back(make_record("15", p3, "N-x", "-N-n+x-beta-1", "-n-x-alpha-1", "N"));
  c.push_back(make_record("16", p3, "N+n+alpha+beta+1", "-N-n+x-beta-1", "beta", "N"));
  c.push_back(make_record("17", p4, "n-N-1", "-2*n-alpha-beta-1", "beta", "n-x-1"));
  c.push_back(make_record("18", p4, "n+alpha", "-2*n-alpha-beta-1", "N+alpha+beta+1", "n-x-1"));
  c.push_back(make_record("19", p4, "-N+n-1", "x-n", "-n-x-alpha-1", "2*n+alpha+beta"));
  c.push_back(make_record("20", p4, "n+alpha", "x-n", "N-n-x", "2*n+alpha+beta"));
  c.push_back(make_record("21", p5, "x-N-beta", "N+alpha+beta+1", "-2*n-alpha-beta-1", "n-N+x-1"));
  c.push_back(make_record("22", p5, "-N+n-1", "N+alpha+beta+1", "-n-x-alpha-2", "n-N+x-1"));
  c.push_back(make_record("23", p5, "-N+x-beta", "N-n-x", "x-n", "-N-alpha-beta-2"));
  c.push_back(make_record("24", p5, "-N+n-1", "N-n-x", "beta-1", "-N-alpha-beta-2"));
  c.push_back(make_record("25", p6, "N-x", "-N-1", "alpha+beta+1+N", "-beta-1"));
  c.push_back(make_record("26", p6, "-n-alpha-beta-1", "-N-1", "x-n", "-beta-1"));
  c.push_back(make_record("27", p6, "N-x", "beta", "alpha", "N"));
  c.push_back(make_record("28", p6, "-n-alpha-beta-1", "beta", "x-n-N-beta-1", "N"));
  c.push_back(make_record("29", p7, "n+alpha", "x-n", "-N-1", "-beta-1"));
  c.push_back(make_record("30", p7, "N-x", "x-n", "-n-x-alpha-1", "-beta-1"));
  c.push_back(make_record("31", p7, "n+alpha", "beta", "x-n-N-beta-1", "n-x-1"));
  c.push_back(make_record("32", p7, "N-x", "beta", "-2*n-alpha-beta-1", "n-x-1"));

  c.push_back(make_record("4-shifted", p1, "x-N-beta-1", "beta", "alpha", "-N-alpha-beta-2",
                          "record 4 with the target argument lowered by 1", true));
  return c;
}

bool same_record(const TransformRecord& a, const TransformRecord& b) {
  return a.prefactor.alternating == b.prefactor.alternating && a.prefactor.numerator == b.prefactor.numerator &&
         a.prefactor.denominator == b.prefactor.denominator && a.target.argument == b.target.argument &&
         a.target.alpha == b.target.alpha && a.target.beta == b.target.beta && a.target.N == b.target.N;
}

Rational eval_prefactor(const Prefactor& p, std::size_t n, const Bindings& b) {
  Rational value = p.alternating && n % 2 == 1 ? Rational(-1) : Rational(1);
  for (const auto& f : p.numerator) value *= pochhammer(f.eval(b), n);
  for (const auto& f : p.denominator) {
    const Rational d = pochhammer(f.eval(b), n);
    if (d.is_zero()) throw SingularLowerParameter(n, f.eval(b), "prefactor denominator");
    value /= d;
  }
  return value;
}

}  // namespace

const std::vector<TransformRecord>& catalog() {
  static const std::vector<TransformRecord> records = build_catalog();
  return records;
}

std::vector<TransformRecord> printed_catalog() {
  std::vector<TransformRecord> out;
  for (const auto& r : catalog()) {
    if (!r.conjecture) out.push_back(r);
  }
  return out;
}

TransformCheck verify_transform(const TransformRecord& rec, std::size_t n, const Rational& x,
                                const Rational& alpha, const Rational& beta, const Rational& N) {
  TransformCheck out;
  const Bindings b{Rational(static_cast<long>(n)), x, alpha, beta, N};
  try {
    out.lhs = hahn_eval(HahnParams{alpha, beta, N, n}, x);
  } catch (const SingularLowerParameter& e) {
    out.skipped = std::string("left side: ") + e.what();
    return out;
  }
  try {
    const Rational pre = eval_prefactor(rec.prefactor, n, b);
    const HahnParams target{rec.target.alpha.eval(b), rec.target.beta.eval(b), rec.target.N.eval(b), n};
    out.rhs = pre * hahn_eval(target, rec.target.argument.eval(b));
  } catch (const SingularLowerParameter& e) {
    out.skipped = std::string("right side: ") + e.what();
    return out;
  }
  out.holds = out.lhs == out.rhs;
  return out;
}

std::size_t SuiteReport::failing_printed_records() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const RecordReport& r) {
    return !r.conjecture && r.fails > 0;
  }));
}

bool SuiteReport::degree_zero_holds() const {
  return std::all_of(records.begin(), records.end(), [](const RecordReport& r) { return r.degree_zero_holds; });
}

namespace {

RecordReport run_record(const TransformRecord& rec, std::size_t index, std::size_t trials, std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<long> degree(0, 4);
  std::uniform_int_distribution<long> param(-8, 8);
  RecordReport r;
  r.id = rec.id;
  r.conjecture = rec.conjecture;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto n = static_cast<std::size_t>(degree(rng));
    const Rational x(param(rng)), a(param(rng)), b(param(rng)), N(param(rng));
    const TransformCheck c = verify_transform(rec, n, x, a, b, N);
    if (c.skipped) {
      ++r.skips;
    } else if (c.holds) {
      ++r.holds;
    } else {
      ++r.fails;
      if (!r.first_counterexample) r.first_counterexample = Counterexample{n, x, a, b, N, c.lhs, c.rhs};
    }
  }
  for (std::size_t t = 0; t < trials; ++t) {
    const TransformCheck c =
        verify_transform(rec, 0, Rational(param(rng)), Rational(param(rng)), Rational(param(rng)), Rational(param(rng)));
    if (!c.skipped && !c.holds) r.degree_zero_holds = false;
  }
  return r;
}

}  // namespace

SuiteReport run_suite(std::size_t trials_per_record, std::uint64_t seed) {
  if (trials_per_record < 20) throw std::invalid_argument("run_suite needs at least 20 trials per record");
  const auto& records = catalog();
  std::vector<std::future<RecordReport>> jobs;
  jobs.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    jobs.push_back(std::async(std::launch::async, run_record, std::cref(records[i]), i, trials_per_record, seed));
  }
  SuiteReport report;
  report.seed = seed;
  report.trials_per_record = trials_per_record;
  for (auto& j : jobs) report.records.push_back(j.get());

  const auto printed = printed_catalog();
  report.printed_records = printed.size();
  for (std::size_t i = 0; i < printed.size(); ++i) {
    const bool repeat = std::any_of(printed.begin(), printed.begin() + static_cast<long>(i),
                                    [&](const TransformRecord& r) { return same_record(r, printed[i]); });
    if (!repeat) ++report.distinct_printed_records;
  }
  return report;
}

namespace {

struct ChainForm {
  std::string name;
  std::string formula;
  bool printed;
  Rational (*eval)(long m, long N, long n);
};

Rational q_value(long m, const Rational& y, const Rational& a, const Rational& b, const Rational& M) {
  return hahn_eval(HahnParams{a, b, M, static_cast<std::size_t>(m)}, y);
}

Rational unsimplified_prefactor(long m, long N) {
  const auto um = static_cast<std::size_t>(m);
  return Rational((m + 1) * (m + 1), N) * pochhammer(Rational(-m), um) * pochhammer(Rational(N - 1 - m), um) /
         (pochhammer(Rational(2), um) * pochhammer(Rational(N + 1), um));
}

const std::vector<ChainForm>& chain_forms() {
  static const std::vector<ChainForm> forms = {
      {"identification", "((m+1)^2/N) Q_m(-1-n; 1, 0, -1-N)", true,
       [](long m, long N, long n) {
         return Rational((m + 1) * (m + 1), N) * q_value(m, Rational(-1 - n), 1, 0, Rational(-1 - N));
       }},
      {"transformed", "((m+1)^2/N) (-m)_m (N-1-m)_m / ((2)_m (N+1)_m) Q_m(N-n; 0, 1, N-2)", true,
       [](long m, long N, long n) {
         return unsimplified_prefactor(m, N) * q_value(m, Rational(N - n), 0, 1, Rational(N - 2));
       }},
      {"simplified", "((m+1)(N+m+1)/(N(N+1))) Q_m(N-n; 0, 1, N-2)", true,
       [](long m, long N, long n) {
         return Rational((m + 1) * (N + m + 1), N * (N + 1)) * q_value(m, Rational(N - n), 0, 1, Rational(N - 2));
       }},
      {"transformed-shifted", "((m+1)^2/N) (-m)_m (N-1-m)_m / ((2)_m (N+1)_m) Q_m(N-1-n; 0, 1, N-2)", false,
       [](long m, long N, long n) {
         return unsimplified_prefactor(m, N) * q_value(m, Rational(N - 1 - n), 0, 1, Rational(N - 2));
       }},
  };
  return forms;
}

}  // namespace

std::vector<ChainCheck> identification_chain(std::size_t max_order, std::size_t max_window) {
  std::vector<ChainCheck> out;
  for (const auto& form : chain_forms()) {
    ChainCheck c;
    c.name = form.name;
    c.formula = form.formula;
    c.printed = form.printed;
    c.holds = true;
    for (std::size_t N = 2; N <= max_window; ++N) {
      for (std::size_t m = 0; m <= max_order && m + 2 <= N; ++m) {
        const RationalVector taps = shmaliy_coefficients(Route::hyp_simple, m, N).taps;
        for (std::size_t n = 0; n < N; ++n) {
          const Rational got = form.eval(static_cast<long>(m), static_cast<long>(N), static_cast<long>(n));
          ++c.checked;
          if (got != taps(static_cast<Eigen::Index>(n)) && c.holds) {
            c.holds = false;
            c.first_mismatch = std::array<std::size_t, 3>{m, N, n};
            c.expected = taps(static_cast<Eigen::Index>(n));
            c.got = got;
          }
        }
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace hahnfir
