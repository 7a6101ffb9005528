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
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wfa/matrix.hpp"

namespace wfa {

/// A word over an automaton's alphabet; letters are single characters, the
/// empty string is ε.
using Word = std::string;

/// A weighted finite automaton: initial row vector, one n×n transition matrix
/// per alphabet letter, final column vector. Immutable after construction.
class Automaton {
 public:
  /// `alphabet` is the ordered list of distinct letters; `transitions` must
  /// have exactly one n×n matrix per letter, over the same semiring as the
  /// 1×n initial row and n×1 final column. Throws MismatchError otherwise;
  /// dimension must be at least 1.
  Automaton(std::string alphabet, Matrix initial,
            std::map<char, Matrix> transitions, Matrix final_vector);

  const Semiring& semiring() const { return initial_.semiring(); }
  const std::string& alphabet() const { return alphabet_; }
  std::size_t dim() const { return initial_.cols(); }

  const Matrix& initial() const { return initial_; }
  const Matrix& final_vector() const { return final_; }
  /// Throws MismatchError for a letter outside the alphabet.
  const Matrix& transition(char letter) const;
  bool has_letter(char letter) const;

  friend bool operator==(const Automaton& a, const Automaton& b);

 private:
  std::string alphabet_;
  Matrix initial_;
  std::map<char, Matrix> transitions_;
  Matrix final_;
};

/// The matrix of a word under the recursion: empty word ↦ identity, then one
/// right-multiplication per letter. Throws MismatchError on a letter outside
/// the alphabet.
Matrix word_matrix(const Automaton& a, const Word& w);

/// The series coefficient of w: initial · word_matrix · final.
Elem behavior_coeff(const Automaton& a, const Word& w);

/// Streams (word, coefficient) for all |w| ≤ max_len in length-lexicographic
/// order (declared alphabet order), reusing each prefix's state row so every
/// step costs one vector-matrix product. Stops early when fn returns false.
void for_each_coeff(const Automaton& a, std::size_t max_len,
                    const std::function<bool(const Word&, const Elem&)>& fn);

/// Materialized form of for_each_coeff.
std::vector<std::pair<Word, Elem>> enumerate_coeffs(const Automaton& a,
                                                    std::size_t max_len);

/// True when the initial vector and every transition-matrix row is a unit
/// vector (single nonzero entry equal to one).
bool is_deterministic(const Automaton& a);

}  // namespace wfa
