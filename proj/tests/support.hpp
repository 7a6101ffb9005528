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

// Test-only generators and independent oracles. Everything here must stay
// independent of the implementation paths it is used to check: the word
// oracle re-derives coefficients through the basic evaluator only, the NFA
// oracle is plain subset reachability over bitmasks, and the rank oracle is
// its own little elimination over mpq.

#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wfa/automaton.hpp"
#include "wfa/io.hpp"
#include "wfa/simulation.hpp"

namespace ts {

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline bool coin(Rng& rng) { return pick(rng, 2) == 0; }

// --- literal builders -------------------------------------------------------

inline wfa::Automaton aut(const std::string& text) {
  std::istringstream in(text);
  return wfa::parse_automaton(in, "<test>", ".");
}

inline wfa::Matrix mat(const wfa::Semiring& s, std::size_t r, std::size_t c,
                       const std::vector<std::string>& tokens) {
  assert(tokens.size() == r * c);
  std::vector<wfa::Elem> entries;
  entries.reserve(tokens.size());
  for (const auto& t : tokens) entries.push_back(s.parse(t));
  return wfa::Matrix(s, r, c, std::move(entries));
}

inline std::shared_ptr<const wfa::TableData> bool_table() {
  return std::make_shared<wfa::TableData>(
      std::vector<std::string>{"0", "1"}, std::vector<std::uint32_t>{0, 1, 1, 1},
      std::vector<std::uint32_t>{0, 0, 0, 1}, 0, 1);
}

/// ℤ_n with addition and multiplication mod n; a semiring for every n ≥ 2,
/// a field exactly when n is prime.
inline std::shared_ptr<const wfa::TableData> zmod_table(std::uint32_t n) {
  std::vector<std::string> labels;
  for (std::uint32_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<std::uint32_t> add(n * n), mul(n * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      add[i * n + j] = (i + j) % n;
      mul[i * n + j] = (i * j) % n;
    }
  return std::make_shared<wfa::TableData>(std::move(labels), std::move(add),
                                          std::move(mul), 0, 1);
}

inline wfa::Semiring gf2() { return wfa::Semiring::table(zmod_table(2)); }

// --- random values ----------------------------------------------------------

inline wfa::Elem random_elem(const wfa::Semiring& s, Rng& rng) {
  using Kind = wfa::Semiring::Kind;
  switch (s.kind()) {
    case Kind::boolean:
      return coin(rng);
    case Kind::naturals:
      return mpz_class(static_cast<unsigned long>(pick(rng, 5)));
    case Kind::integers:
      return mpz_class(static_cast<long>(pick(rng, 9)) - 4);
    case Kind::rationals: {
      mpq_class q(static_cast<long>(pick(rng, 9)) - 4,
                  static_cast<long>(pick(rng, 4)) + 1);
      q.canonicalize();
      return q;
    }
    case Kind::tropical:
      if (pick(rng, 4) == 0) return wfa::Tropical::infinity();
      return wfa::Tropical::finite(pick(rng, 7));
    case Kind::table:
      return wfa::TableRef{
          static_cast<std::uint32_t>(pick(rng, s.table_data()->size()))};
  }
  return s.zero();
}

/// Large values exercising the arbitrary-precision carriers.
inline wfa::Elem random_big_elem(const wfa::Semiring& s, Rng& rng) {
  using Kind = wfa::Semiring::Kind;
  auto big = [&] {
    mpz_class v = 1;
    for (int i = 0; i < 5; ++i) v = v * static_cast<unsigned long>(rng());
    return v;
  };
  switch (s.kind()) {
    case Kind::naturals:
      return big();
    case Kind::integers:
      return mpz_class(coin(rng) ? big() : mpz_class(-big()));
    case Kind::rationals: {
      mpq_class q(big(), big() + 1);
      q.canonicalize();
      return coin(rng) ? wfa::Elem(q) : wfa::Elem(mpq_class(-q));
    }
    default:
      return random_elem(s, rng);
  }
}

inline wfa::Matrix random_matrix(const wfa::Semiring& s, std::size_t r,
                                 std::size_t c, Rng& rng) {
  wfa::Matrix m(s, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_elem(s, rng);
  return m;
}

inline wfa::Automaton random_automaton(const wfa::Semiring& s,
                                       const std::string& alphabet,
                                       std::size_t dim, Rng& rng) {
  std::map<char, wfa::Matrix> trans;
  for (char a : alphabet) trans.emplace(a, random_matrix(s, dim, dim, rng));
  return wfa::Automaton(alphabet, random_matrix(s, 1, dim, rng),
                        std::move(trans), random_matrix(s, dim, 1, rng));
}

inline wfa::Word random_word(const std::string& alphabet, std::size_t max_len,
                             Rng& rng) {
  wfa::Word w;
  const std::size_t len = pick(rng, max_len + 1);
  for (std::size_t i = 0; i < len && !alphabet.empty(); ++i)
    w.push_back(alphabet[pick(rng, alphabet.size())]);
  return w;
}

// --- certified pairs --------------------------------------------------------

/// Distributes `value` over the addressed slots so that their semiring sum is
/// `value`: an additive split when subtraction (or small-natural splitting)
/// is available, a duplicate when addition is idempotent on the value, and a
/// single slot otherwise.
inline void distribute(const wfa::Semiring& s, const wfa::Elem& value,
                       std::vector<wfa::Elem*> slots, Rng& rng) {
  assert(!slots.empty());
  if (slots.size() == 1 || coin(rng)) {
    *slots[pick(rng, slots.size())] = value;
    return;
  }
  const std::size_t i = pick(rng, slots.size());
  std::size_t j = pick(rng, slots.size() - 1);
  if (j >= i) ++j;
  if (s.is_ring()) {
    const wfa::Elem u = random_elem(s, rng);
    *slots[i] = u;
    *slots[j] = s.sub(value, u);
    return;
  }
  if (s.kind() == wfa::Semiring::Kind::naturals) {
    const mpz_class& v = std::get<mpz_class>(value);
    const mpz_class u(static_cast<unsigned long>(pick(rng, 5)) %
                      (v.get_ui() + 1));
    *slots[i] = u;
    *slots[j] = mpz_class(v - u);
    return;
  }
  if (s.eq(s.add(value, value), value)) {  // idempotent on this value
    *slots[i] = value;
    *slots[j] = value;
    return;
  }
  *slots[i] = value;
}

struct CertifiedPair {
  wfa::Automaton source;
  wfa::Automaton target;
  wfa::Matrix x;  // simulation source → target, unit rows
};

/// Builds a dimension-p expansion of `target` together with a valid
/// simulation onto it: states of the expansion map onto target states by a
/// surjection, and every target weight is distributed over the corresponding
/// fiber.
inline CertifiedPair expand(const wfa::Automaton& target, std::size_t p,
                            Rng& rng) {
  const wfa::Semiring& s = target.semiring();
  const std::size_t n = target.dim();
  assert(p >= n);
  std::vector<std::size_t> onto(p);
  for (std::size_t i = 0; i < p; ++i) onto[i] = i < n ? i : pick(rng, n);
  std::shuffle(onto.begin(), onto.end(), rng);

  std::vector<std::vector<std::size_t>> fiber(n);
  for (std::size_t i = 0; i < p; ++i) fiber[onto[i]].push_back(i);

  wfa::Matrix x(s, p, n);
  for (std::size_t i = 0; i < p; ++i) x(i, onto[i]) = s.one();

  wfa::Matrix kappa(s, 1, p);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<wfa::Elem*> slots;
    for (std::size_t i : fiber[j]) slots.push_back(&kappa(0, i));
    distribute(s, target.initial()(0, j), std::move(slots), rng);
  }

  std::map<char, wfa::Matrix> trans;
  for (char letter : target.alphabet()) {
    const wfa::Matrix& nmat = target.transition(letter);
    wfa::Matrix r(s, p, p);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<wfa::Elem*> slots;
        for (std::size_t k : fiber[j]) slots.push_back(&r(i, k));
        distribute(s, nmat(onto[i], j), std::move(slots), rng);
      }
    trans.emplace(letter, std::move(r));
  }

  wfa::Matrix lambda(s, p, 1);
  for (std::size_t i = 0; i < p; ++i)
    lambda(i, 0) = target.final_vector()(onto[i], 0);

  wfa::Automaton source(target.alphabet(), std::move(kappa), std::move(trans),
                        std::move(lambda));
  assert(wfa::check_simulation(source, target, x).ok);
  return CertifiedPair{std::move(source), target, std::move(x)};
}

/// Two equivalent automata: independent expansions (or verbatim copies) of a
/// common random base.
inline std::pair<wfa::Automaton, wfa::Automaton> equivalent_pair(
    const wfa::Semiring& s, const std::string& alphabet, std::size_t base_dim,
    std::size_t max_dim, Rng& rng) {
  const wfa::Automaton base = random_automaton(s, alphabet, base_dim, rng);
  auto derive = [&]() -> wfa::Automaton {
    if (pick(rng, 4) == 0) return base;
    const std::size_t p = base_dim + pick(rng, max_dim - base_dim + 1);
    return expand(base, p, rng).source;
  };
  return {derive(), derive()};
}

/// Copy of `a` with one entry replaced by a different random element.
inline wfa::Automaton perturb(const wfa::Automaton& a, Rng& rng) {
  const wfa::Semiring& s = a.semiring();
  const std::size_t n = a.dim();
  wfa::Matrix alpha = a.initial();
  wfa::Matrix beta = a.final_vector();
  std::map<char, wfa::Matrix> trans;
  for (char c : a.alphabet()) trans.emplace(c, a.transition(c));

  const std::size_t spots = n + n + a.alphabet().size() * n * n;
  const std::size_t spot = pick(rng, spots);
  wfa::Elem* target;
  if (spot < n)
    target = &alpha(0, spot);
  else if (spot < 2 * n)
    target = &beta(spot - n, 0);
  else {
    const std::size_t off = spot - 2 * n;
    const char letter = a.alphabet()[off / (n * n)];
    target = &trans.at(letter)(off % (n * n) / n, off % n);
  }
  wfa::Elem replacement = random_elem(s, rng);
  while (wfa::elem_eq(replacement, *target)) {
    if (s.is_zero(replacement))
      replacement = s.one();
    else
      replacement = random_elem(s, rng);
  }
  *target = std::move(replacement);
  return wfa::Automaton(a.alphabet(), std::move(alpha), std::move(trans),
                        std::move(beta));
}

// --- independent oracles ----------------------------------------------------

/// Heuristic ground truth at desk scale: coefficients agree on all |w| ≤
/// bound, each re-derived through the basic evaluator.
inline bool words_agree(const wfa::Automaton& a, const wfa::Automaton& b,
                        std::size_t bound) {
  const auto ca = wfa::enumerate_coeffs(a, bound);
  const auto cb = wfa::enumerate_coeffs(b, bound);
  assert(ca.size() == cb.size());
  for (std::size_t i = 0; i < ca.size(); ++i) {
    assert(ca[i].first == cb[i].first);
    if (!wfa::elem_eq(ca[i].second, cb[i].second)) return false;
  }
  return true;
}

/// Subset-reachability acceptance of a Boolean automaton read as an ordinary
/// NFA; independent of the matrix layer.
inline bool nfa_accepts(const wfa::Automaton& a, const wfa::Word& w) {
  assert(a.dim() <= 64);
  const wfa::Semiring& s = a.semiring();
  std::uint64_t states = 0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!s.is_zero(a.initial()(0, i))) states |= std::uint64_t{1} << i;
  for (char letter : w) {
    const wfa::Matrix& m = a.transition(letter);
    std::uint64_t next = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (!(states & (std::uint64_t{1} << i))) continue;
      for (std::size_t j = 0; j < a.dim(); ++j)
        if (!s.is_zero(m(i, j))) next |= std::uint64_t{1} << j;
    }
    states = next;
  }
  for (std::size_t i = 0; i < a.dim(); ++i)
    if ((states & (std::uint64_t{1} << i)) &&
        !s.is_zero(a.final_vector()(i, 0)))
      return true;
  return false;
}

/// Row rank over ℚ by an elimination written for this purpose only.
inline std::size_t mpq_rank(std::vector<std::vector<mpq_class>> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pr = rank;
    while (pr < rows.size() && rows[pr][c] == 0) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[rank], rows[pr]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const mpq_class f = rows[r][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j)
        rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace ts
