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
#include <vector>

#include "wfa/semiring.hpp"

namespace wfa {

/// Dense rectangular matrix of semiring elements, row-major. Row vectors are
/// 1×n, column vectors n×1. All arithmetic is exact; operations throw
/// MismatchError on dimension or semiring mismatch.
class Matrix {
 public:
  /// Zero-filled.
  Matrix(Semiring s, std::size_t rows, std::size_t cols);
  Matrix(Semiring s, std::size_t rows, std::size_t cols,
         std::vector<Elem> entries);

  static Matrix identity(const Semiring& s, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Semiring& semiring() const { return semiring_; }

  const Elem& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  Elem& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }

  const std::vector<Elem>& entries() const { return entries_; }

  /// The single entry of a 1×1 matrix.
  const Elem& scalar() const;

  Matrix row(std::size_t i) const;
  Matrix col(std::size_t j) const;

  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  /// Value equality: same semiring, dimensions, and entries.
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Semiring semiring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> entries_;
};

/// Left scalar action s·v, entrywise.
Matrix scale(const Elem& s, const Matrix& v);

/// Horizontal concatenation of two matrices with equal row counts.
Matrix hconcat(const Matrix& a, const Matrix& b);

/// Entry (0,0) of row·col for a 1×k row and k×1 column.
Elem dot(const Matrix& row, const Matrix& col);

/// True when the 1×n or n×1 vector has exactly one nonzero entry and that
/// entry equals one.
bool is_unit_vector(const Matrix& v);

}  // namespace wfa
