/*
 *   Copyright 2026 the wfakit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wfa {

/// Structural misuse of an operation: dimension, semiring, or alphabet
/// mismatch between operands. Distinct from a negative verification result,
/// which is reported through the operation's report type.
class MismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was invoked on a semiring outside its supported mode table
/// (e.g. joint construction over the naturals or the tropical semiring).
class UnsupportedSemiringError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Checked tropical product overflowed the 64-bit finite range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A table semiring's raw tables are malformed (wrong sizes, index out of
/// range, duplicate labels). Distinct from an axiom failure, which a
/// well-shaped table reports through validate_table_semiring.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A table semiring failed axiom validation when a valid one was required.
class InvalidTableError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text input could not be parsed; carries file, line, and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string file, std::size_t line, std::size_t column,
             const std::string& message)
      : std::runtime_error(file + ":" + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + message),
        file_(std::move(file)),
        line_(line),
        column_(column) {}

  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string file_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace wfa
