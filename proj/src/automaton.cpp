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

#include "wfa/automaton.hpp"

#include <set>
#include <utility>

namespace wfa {

Automaton::Automaton(std::string alphabet, Matrix initial,
                     std::map<char, Matrix> transitions, Matrix final_vector)
    : alphabet_(std::move(alphabet)),
      initial_(std::move(initial)),
      transitions_(std::move(transitions)),
      final_(std::move(final_vector)) {
  const std::size_t n = initial_.cols();
  if (n < 1) throw MismatchError("automaton dimension must be at least 1");
  if (initial_.rows() != 1)
    throw MismatchError("initial vector must be a 1xn row");
  if (final_.rows() != n || final_.cols() != 1)
    throw MismatchError("final vector must be an nx1 column");
  if (!(final_.semiring() == initial_.semiring()))
    throw MismatchError("initial/final vectors over different semirings");
  std::set<char> letters(alphabet_.begin(), alphabet_.end());
  if (letters.size() != alphabet_.size())
    throw MismatchError("alphabet letters must be distinct");
  if (transitions_.size() != alphabet_.size())
    throw MismatchError("need exactly one transition matrix per letter");
  for (char a : alphabet_) {
    auto it = transitions_.find(a);
    if (it == transitions_.end())
      throw MismatchError(std::string("missing transition matrix for '") + a +
                          "'");
    const Matrix& m = it->second;
    if (m.rows() != n || m.cols() != n)
      throw MismatchError(std::string("transition matrix for '") + a +
                          "' is not nxn");
    if (!(m.semiring() == initial_.semiring()))
      throw MismatchError(std::string("transition matrix for '") + a +
                          "' over a different semiring");
  }
}

const Matrix& Automaton::transition(char letter) const {
  auto it = transitions_.find(letter);
  if (it == transitions_.end())
    throw MismatchError(std::string("letter '") + letter +
                        "' outside the alphabet");
  return it->second;
}

bool Automaton::has_letter(char letter) const {
  return transitions_.count(letter) != 0;
}

bool operator==(const Automaton& a, const Automaton& b) {
  return a.alphabet_ == b.alphabet_ && a.initial_ == b.initial_ &&
         a.final_ == b.final_ && a.transitions_ == b.transitions_;
}

Matrix word_matrix(const Automaton& a, const Word& w) {
  Matrix m = Matrix::identity(a.semiring(), a.dim());
  for (char letter : w) m = m * a.transition(letter);
  return m;
}

Elem behavior_coeff(const Automaton& a, const Word& w) {
  Matrix state = a.initial();
  for (char letter : w) state = state * a.transition(letter);
  return dot(state, a.final_vector());
}

void for_each_coeff(const Automaton& a, std::size_t max_len,
                    const std::function<bool(const Word&, const Elem&)>& fn) {
  std::vector<std::pair<Word, Matrix>> level;
  level.emplace_back(Word{}, a.initial());
  for (std::size_t len = 0;; ++len) {
    for (const auto& [word, state] : level)
      if (!fn(word, dot(state, a.final_vector()))) return;
    if (len == max_len) return;
    std::vector<std::pair<Word, Matrix>> next;
    next.reserve(level.size() * a.alphabet().size());
    for (const auto& [word, state] : level)
      for (char letter : a.alphabet())
        next.emplace_back(word + letter, state * a.transition(letter));
    if (next.empty()) return;  // empty alphabet
    level = std::move(next);
  }
}

std::vector<std::pair<Word, Elem>> enumerate_coeffs(const Automaton& a,
                                                    std::size_t max_len) {
  std::vector<std::pair<Word, Elem>> out;
  for_each_coeff(a, max_len, [&](const Word& w, const Elem& c) {
    out.emplace_back(w, c);
    return true;
  });
  return out;
}

bool is_deterministic(const Automaton& a) {
  if (!is_unit_vector(a.initial())) return false;
  for (char letter : a.alphabet()) {
    const Matrix& m = a.transition(letter);
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!is_unit_vector(m.row(i))) return false;
  }
  return true;
}

}  // namespace wfa
