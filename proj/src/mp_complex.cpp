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

#include "hahnfir/mp_complex.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace hahnfir {

mpfr_prec_t digits_to_bits(int digits) {
  if (digits < 1) throw std::invalid_argument("precision must be at least one decimal digit");
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362));
}

MPReal::MPReal(int digits) : digits_(digits) {
  mpfr_init2(value_, digits_to_bits(digits));
  mpfr_set_zero(value_, 1);
}

MPReal::MPReal(double value, int digits) : MPReal(digits) {
  mpfr_set_d(value_, value, MPFR_RNDN);
}

MPReal::MPReal(const Rational& value, int digits) : MPReal(digits) {
  mpfr_set_q(value_, value.value().get_mpq_t(), MPFR_RNDN);
}

MPReal::MPReal(const MPReal& other) : digits_(other.digits_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

MPReal::MPReal(MPReal&& other) noexcept : digits_(other.digits_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

MPReal& MPReal::operator=(const MPReal& other) {
  if (this != &other) {
    digits_ = other.digits_;
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

MPReal& MPReal::operator=(MPReal&& other) noexcept {
  std::swap(digits_, other.digits_);
  mpfr_swap(value_, other.value_);
  return *this;
}

MPReal::~MPReal() { mpfr_clear(value_); }

MPReal MPReal::pi(int digits) {
  MPReal r(digits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

std::string MPReal::to_string() const { return to_string(digits_); }

std::string MPReal::to_string(int significant) const {
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Re", std::max(significant - 1, 0), value_);
  std::unique_ptr<char, decltype(&mpfr_free_str)> guard(raw, &mpfr_free_str);
  return std::string(raw);
}

MPReal MPReal::with_digits(int digits) const {
  MPReal r(digits);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

namespace {

template <class Op>
MPReal binary(const MPReal& a, const MPReal& b, Op op) {
  MPReal r(std::min(a.digits(), b.digits()));
  op(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

template <class Op>
MPReal unary(const MPReal& a, Op op) {
  MPReal r(a.digits());
  op(r.get(), a.get(), MPFR_RNDN);
  return r;
}

}  // namespace

MPReal operator+(const MPReal& a, const MPReal& b) { return binary(a, b, mpfr_add); }
MPReal operator-(const MPReal& a, const MPReal& b) { return binary(a, b, mpfr_sub); }
MPReal operator*(const MPReal& a, const MPReal& b) { return binary(a, b, mpfr_mul); }
MPReal operator/(const MPReal& a, const MPReal& b) { return binary(a, b, mpfr_div); }
MPReal operator-(const MPReal& a) { return unary(a, mpfr_neg); }

MPReal sqrt(const MPReal& x) { return unary(x, mpfr_sqrt); }
MPReal sin(const MPReal& x) { return unary(x, mpfr_sin); }
MPReal cos(const MPReal& x) { return unary(x, mpfr_cos); }
MPReal abs(const MPReal& x) { return unary(x, mpfr_abs); }
MPReal atan2(const MPReal& y, const MPReal& x) { return binary(y, x, mpfr_atan2); }
MPReal hypot(const MPReal& x, const MPReal& y) { return binary(x, y, mpfr_hypot); }
MPReal max(const MPReal& a, const MPReal& b) { return binary(a, b, mpfr_max); }

MPComplex::MPComplex(int digits) : re_(digits), im_(digits), digits_(digits) {}

MPComplex::MPComplex(const Rational& re, int digits)
    : re_(re, digits), im_(digits), digits_(digits) {}

MPComplex::MPComplex(const Rational& re, const Rational& im, int digits)
    : re_(re, digits), im_(im, digits), digits_(digits) {}

MPComplex::MPComplex(MPReal re, MPReal im)
    : re_(std::move(re)), im_(std::move(im)), digits_(std::min(re_.digits(), im_.digits())) {
  mixed_ = re_.digits() != im_.digits();
}

MPComplex MPComplex::unit(double theta, int digits) { return unit(MPReal(theta, digits)); }

MPComplex MPComplex::unit(const MPReal& theta) {
  MPReal c(theta.digits());
  MPReal s(theta.digits());
  mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
  return MPComplex(std::move(c), std::move(s));
}

MPReal MPComplex::abs() const { return hypot(re_, im_); }
MPReal MPComplex::arg() const { return atan2(im_, re_); }

MPComplex MPComplex::conj() const {
  MPComplex r(re_, -im_);
  r.mixed_ = mixed_;
  return r;
}

MPComplex MPComplex::with_digits(int digits) const {
  return MPComplex(re_.with_digits(digits), im_.with_digits(digits));
}

void MPComplex::absorb_precision(const MPComplex& rhs) {
  if (rhs.digits_ != digits_ || rhs.mixed_) mixed_ = true;
  digits_ = std::min(digits_, rhs.digits_);
}

MPComplex& MPComplex::operator+=(const MPComplex& rhs) {
  absorb_precision(rhs);
  re_ = re_ + rhs.re_;
  im_ = im_ + rhs.im_;
  return *this;
}

MPComplex& MPComplex::operator-=(const MPComplex& rhs) {
  absorb_precision(rhs);
  re_ = re_ - rhs.re_;
  im_ = im_ - rhs.im_;
  return *this;
}

MPComplex& MPComplex::operator*=(const MPComplex& rhs) {
  absorb_precision(rhs);
  MPReal re = re_ * rhs.re_ - im_ * rhs.im_;
  MPReal im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

MPComplex& MPComplex::operator/=(const MPComplex& rhs) {
  if (rhs.is_zero()) throw std::domain_error("MPComplex: division by zero");
  absorb_precision(rhs);
  // Smith's algorithm keeps the intermediate quotient bounded.
  if (mpfr_cmpabs(rhs.re_.get(), rhs.im_.get()) >= 0) {
    const MPReal ratio = rhs.im_ / rhs.re_;
    const MPReal denom = rhs.re_ + rhs.im_ * ratio;
    MPReal re = (re_ + im_ * ratio) / denom;
    MPReal im = (im_ - re_ * ratio) / denom;
    re_ = std::move(re);
    im_ = std::move(im);
  } else {
    const MPReal ratio = rhs.re_ / rhs.im_;
    const MPReal denom = rhs.re_ * ratio + rhs.im_;
    MPReal re = (re_ * ratio + im_) / denom;
    MPReal im = (im_ * ratio - re_) / denom;
    re_ = std::move(re);
    im_ = std::move(im);
  }
  return *this;
}

std::ostream& operator<<(std::ostream& os, const MPComplex& z) {
  return os << "(" << z.re_ << ", " << z.im_ << ")";
}

}  // namespace hahnfir
