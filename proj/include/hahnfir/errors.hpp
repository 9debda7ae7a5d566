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

#ifndef HAHNFIR_ERRORS_HPP_
#define HAHNFIR_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

#include "hahnfir/rational.hpp"

namespace hahnfir {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A lower-parameter Pochhammer symbol (b)_k vanished at term `index`.
class SingularLowerParameter : public Error {
 public:
  SingularLowerParameter(std::size_t index, const Rational& parameter)
      : Error("singular lower parameter " + parameter.to_string() + " at term " +
              std::to_string(index)),
        index_(index),
        parameter_(parameter) {}
  SingularLowerParameter(std::size_t index, const Rational& parameter, const std::string& hint)
      : Error("singular lower parameter " + parameter.to_string() + " at term " +
              std::to_string(index) + ": " + hint),
        index_(index),
        parameter_(parameter) {}

  std::size_t index() const noexcept { return index_; }
  const Rational& parameter() const noexcept { return parameter_; }

 private:
  std::size_t index_;
  Rational parameter_;
};

class OrderTooLarge : public Error {
 public:
  OrderTooLarge(std::size_t m, std::size_t window)
      : Error("order exceeds window: m+1 = " + std::to_string(m + 1) + " > N = " +
              std::to_string(window)) {}
};

class OutOfSupport : public Error {
 public:
  using Error::Error;
};

class ZeroArgument : public Error {
 public:
  ZeroArgument() : Error("transfer function evaluated at z = 0") {}
};

/// The closed transfer form was requested inside the |z - 1| guard band.
class NearSingular : public Error {
 public:
  using Error::Error;
};

class InvalidForm : public Error {
 public:
  using Error::Error;
};

class WindowOutOfRange : public Error {
 public:
  using Error::Error;
};

class OrderExceedsWindow : public Error {
 public:
  using Error::Error;
};

class SignalTooShort : public Error {
 public:
  SignalTooShort(std::size_t length, std::size_t window)
      : Error("signal too short: " + std::to_string(length) + " samples for a window of " +
              std::to_string(window)) {}
};

}  // namespace hahnfir

#endif  // HAHNFIR_ERRORS_HPP_
