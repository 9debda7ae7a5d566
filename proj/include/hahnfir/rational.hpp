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

#ifndef HAHNFIR_RATIONAL_HPP_
#define HAHNFIR_RATIONAL_HPP_

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include <Eigen/Core>

namespace hahnfir {

/// Exact fraction of arbitrary-size integers, always kept in lowest terms
/// with a positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      value_ = static_cast<long>(value);
    } else {
      value_ = static_cast<unsigned long>(value);
    }
  }

  /// Throws std::domain_error when `den` is zero.
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& value);

  /// Parses "p/q", "p", or a finite decimal such as "-1.25e-3" exactly.
  /// Throws std::invalid_argument on malformed input.
  static Rational parse(std::string_view text);

  /// Exact value of a finite double (every double is a dyadic rational).
  static Rational from_double(double value);

  const mpq_class& value() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_integer() const noexcept { return value_.get_den() == 1; }
  bool is_nonpositive_integer() const noexcept {
    return is_integer() && sgn(value_) <= 0;
  }
  int sign() const noexcept { return sgn(value_); }

  /// Throws std::range_error if not an integer that fits in a long.
  long to_long() const;
  /// Correctly rounded (nearest) double.
  double to_double() const;

  /// Serialized form "numerator/denominator" (the denominator is always
  /// written, even when it is 1).
  std::string to_string() const;

  Rational& operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Rational& operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  Rational& operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

  friend bool operator==(const Rational& lhs, const Rational& rhs) noexcept {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs,
                                          const Rational& rhs) noexcept {
    const int c = cmp(lhs.value_, rhs.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x);

 private:
  mpq_class value_;
};

Rational abs(const Rational& x);

/// Integer power; negative exponents invert (throws on 0^negative).
Rational pow(const Rational& base, long exponent);

using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace hahnfir

namespace Eigen {

template <>
struct NumTraits<hahnfir::Rational> : GenericNumTraits<hahnfir::Rational> {
  using Real = hahnfir::Rational;
  using NonInteger = hahnfir::Rational;
  using Literal = hahnfir::Rational;
  using Nested = hahnfir::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 16
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // HAHNFIR_RATIONAL_HPP_
