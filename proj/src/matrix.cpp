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

#include "wfa/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace wfa {

Matrix::Matrix(Semiring s, std::size_t rows, std::size_t cols)
    : semiring_(std::move(s)),
      rows_(rows),
      cols_(cols),
      entries_(rows * cols, semiring_.zero()) {}

Matrix::Matrix(Semiring s, std::size_t rows, std::size_t cols,
               std::vector<Elem> entries)
    : semiring_(std::move(s)), rows_(rows), cols_(cols),
      entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw MismatchError("entry count does not match matrix shape");
}

Matrix Matrix::identity(const Semiring& s, std::size_t n) {
  Matrix e(s, n, n);
  for (std::size_t i = 0; i < n; ++i) e(i, i) = s.one();
  return e;
}

const Elem& Matrix::scalar() const {
  if (rows_ != 1 || cols_ != 1)
    throw MismatchError("scalar() on a non-1x1 matrix");
  return entries_[0];
}

Matrix Matrix::row(std::size_t i) const {
  Matrix r(semiring_, 1, cols_);
  for (std::size_t j = 0; j < cols_; ++j) r(0, j) = (*this)(i, j);
  return r;
}

Matrix Matrix::col(std::size_t j) const {
  Matrix c(semiring_, rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
  return c;
}

bool Matrix::is_zero() const {
  const Elem z = semiring_.zero();
  for (const Elem& e : entries_)
    if (!elem_eq(e, z)) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (!(a.semiring_ == b.semiring_))
    throw MismatchError("matrix product across different semirings");
  if (a.cols_ != b.rows_)
    throw MismatchError("matrix product dimension mismatch: " +
                        std::to_string(a.rows_) + "x" +
                        std::to_string(a.cols_) + " * " +
                        std::to_string(b.rows_) + "x" +
                        std::to_string(b.cols_));
  const Semiring& s = a.semiring_;
  Matrix c(s, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Elem acc = s.zero();
      for (std::size_t k = 0; k < a.cols_; ++k)
        acc = s.add(acc, s.mul(a(i, k), b(k, j)));
      c(i, j) = std::move(acc);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (!(a.semiring_ == b.semiring_))
    throw MismatchError("matrix sum across different semirings");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw MismatchError("matrix sum dimension mismatch");
  const Semiring& s = a.semiring_;
  Matrix c(s, a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.entries_.size(); ++i)
    c.entries_[i] = s.add(a.entries_[i], b.entries_[i]);
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.semiring_ == b.semiring_ && a.rows_ == b.rows_ &&
         a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

Matrix scale(const Elem& s, const Matrix& v) {
  const Semiring& sr = v.semiring();
  Matrix out(sr, v.rows(), v.cols());
  for (std::size_t i = 0; i < v.rows(); ++i)
    for (std::size_t j = 0; j < v.cols(); ++j)
      out(i, j) = sr.mul(s, v(i, j));
  return out;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
  if (!(a.semiring() == b.semiring()))
    throw MismatchError("hconcat across different semirings");
  if (a.rows() != b.rows()) throw MismatchError("hconcat row mismatch");
  Matrix out(a.semiring(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

Elem dot(const Matrix& row, const Matrix& col) { return (row * col).scalar(); }

bool is_unit_vector(const Matrix& v) {
  if (v.rows() != 1 && v.cols() != 1) return false;
  const Semiring& s = v.semiring();
  std::size_t nonzero = 0;
  bool one_ok = false;
  for (const Elem& e : v.entries()) {
    if (s.is_zero(e)) continue;
    ++nonzero;
    one_ok = s.is_one(e);
  }
  return nonzero == 1 && one_ok;
}

}  // namespace wfa
