// Copyright 2026 The gpoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gpoly {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// polynomial arithmetic

class ArithmeticCapacityError : public Error {
 public:
  using Error::Error;
};

class NegativePowerOfNonMonomial : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomialError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

class UnboundVariableError : public Error {
 public:
  using Error::Error;
};

// graphs

class InvalidEdgeRef : public Error {
 public:
  using Error::Error;
};

class UnknownVertex : public Error {
 public:
  using Error::Error;
};

class EmptyGraphError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `line` and `column` are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line,
                            std::size_t column) {
    std::string out = "parse error";
    if (line != 0) {
      out += " at line " + std::to_string(line);
      if (column != 0) out += ", column " + std::to_string(column);
    } else if (column != 0) {
      out += " at byte " + std::to_string(column);
    }
    return out + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

// computation guards

class SizeGuardExceeded : public Error {
 public:
  using Error::Error;
};

class EnumerationGuardExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidPalette : public Error {
 public:
  using Error::Error;
};

// transforms and encodings

class NonPolynomialResult : public Error {
 public:
  using Error::Error;
};

class MalformedQ : public Error {
 public:
  using Error::Error;
};

class NonIntegralDivision : public Error {
 public:
  using Error::Error;
};

class MalformedInput : public Error {
 public:
  using Error::Error;
};

}  // namespace gpoly
