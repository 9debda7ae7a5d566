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

#ifndef HAHNFIR_MP_COMPLEX_HPP_
#define HAHNFIR_MP_COMPLEX_HPP_

#include <complex>
#include <ostream>
#include <string>

#include <mpfr.h>

#include "hahnfir/rational.hpp"

namespace hahnfir {

/// Default working precision in decimal digits.
inline constexpr int kDefaultDigits = 64;

/// Binary precision (bits) that carries `digits` significant decimal digits.
mpfr_prec_t digits_to_bits(int digits);

/// Owning wrapper over an MPFR value. Every value carries the decimal
/// precision it was created with; binary operations work at the smaller of
/// the two operand precisions.
class MPReal {
 public:
  explicit MPReal(int digits = kDefaultDigits);
  MPReal(double value, int digits);
  MPReal(const Rational& value, int digits);
  MPReal(const MPReal& other);
  MPReal(MPReal&& other) noexcept;
  MPReal& operator=(const MPReal& other);
  MPReal& operator=(MPReal&& other) noexcept;
  ~MPReal();

  static MPReal pi(int digits);

  int digits() const noexcept { return digits_; }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Scientific notation with `digits()` significant digits.
  std::string to_string() const;
  std::string to_string(int significant) const;
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  /// Same value carried at a different precision (rounded when narrowing).
  MPReal with_digits(int digits) const;

  friend MPReal operator+(const MPReal& a, const MPReal& b);
  friend MPReal operator-(const MPReal& a, const MPReal& b);
  friend MPReal operator*(const MPReal& a, const MPReal& b);
  friend MPReal operator/(const MPReal& a, const MPReal& b);
  friend MPReal operator-(const MPReal& a);

  friend bool operator<(const MPReal& a, const MPReal& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const MPReal& a, const MPReal& b) { return b < a; }

  friend std::ostream& operator<<(std::ostream& os, const MPReal& x) { return os << x.to_string(); }

 private:
  int digits_;
  mpfr_t value_;
};

MPReal sqrt(const MPReal& x);
MPReal sin(const MPReal& x);
MPReal cos(const MPReal& x);
MPReal abs(const MPReal& x);
MPReal atan2(const MPReal& y, const MPReal& x);
MPReal hypot(const MPReal& x, const MPReal& y);
MPReal max(const MPReal& a, const MPReal& b);

/// Complex number whose two components share a decimal precision. Combining
/// two values of different precision yields the smaller precision and sets
/// the `mixed_precision` flag on the result.
class MPComplex {
 public:
  explicit MPComplex(int digits = kDefaultDigits);
  MPComplex(const Rational& re, int digits);
  MPComplex(const Rational& re, const Rational& im, int digits);
  MPComplex(MPReal re, MPReal im);

  /// exp(j*theta) with theta given as a double radian value.
  static MPComplex unit(double theta, int digits);
  static MPComplex unit(const MPReal& theta);

  int digits() const noexcept { return digits_; }
  bool mixed_precision() const noexcept { return mixed_; }
  const MPReal& real() const noexcept { return re_; }
  const MPReal& imag() const noexcept { return im_; }

  MPReal abs() const;
  MPReal arg() const;
  MPComplex conj() const;
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  MPComplex with_digits(int digits) const;
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

  MPComplex& operator+=(const MPComplex& rhs);
  MPComplex& operator-=(const MPComplex& rhs);
  MPComplex& operator*=(const MPComplex& rhs);
  /// Throws std::domain_error on division by zero.
  MPComplex& operator/=(const MPComplex& rhs);

  friend MPComplex operator+(MPComplex a, const MPComplex& b) { return a += b; }
  friend MPComplex operator-(MPComplex a, const MPComplex& b) { return a -= b; }
  friend MPComplex operator*(MPComplex a, const MPComplex& b) { return a *= b; }
  friend MPComplex operator/(MPComplex a, const MPComplex& b) { return a /= b; }
  friend MPComplex operator-(const MPComplex& a) { return MPComplex(-a.re_, -a.im_); }

  friend std::ostream& operator<<(std::ostream& os, const MPComplex& z);

 private:
  void absorb_precision(const MPComplex& rhs);

  MPReal re_;
  MPReal im_;
  int digits_;
  bool mixed_ = false;
};

inline MPReal abs(const MPComplex& z) { return z.abs(); }
inline MPComplex conj(const MPComplex& z) { return z.conj(); }

}  // namespace hahnfir

#endif  // HAHNFIR_MP_COMPLEX_HPP_
