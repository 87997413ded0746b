// Copyright 2026 The starapolar Authors.
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

#ifndef STARAPOLAR_ERRORS_HPP
#define STARAPOLAR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace starapolar {

// Base of everything this library throws on contract violations.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("inverse of zero") {}
};

// Operands from two different prime fields, or jets of different dimension.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

// Ring, variable-count or degree mismatch between forms.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class InhomogeneousError : public Error {
 public:
  InhomogeneousError(const std::string& message, std::string offending_term)
      : Error(message), offending_term_(std::move(offending_term)) {}

  const std::string& offending_term() const noexcept { return offending_term_; }

 private:
  std::string offending_term_;
};

// Raised when a hyperplane list fails the general-position test. The witness
// holds 0-based indices of n+1 linearly dependent forms.
class GeneralPositionError : public Error {
 public:
  GeneralPositionError(const std::string& message, std::vector<std::size_t> witness)
      : Error(message), witness_(std::move(witness)) {}

  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::size_t> witness_;
};

// A random parameter point produced degenerate hyperplanes; draw again.
class DegenerateParameters : public Error {
 public:
  using Error::Error;
};

}  // namespace starapolar

#endif  // STARAPOLAR_ERRORS_HPP
