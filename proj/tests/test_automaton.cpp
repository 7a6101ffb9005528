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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "support.hpp"
#include "wfa/automaton.hpp"

using namespace wfa;

namespace {

// One-letter scalar automaton: alpha=(1), M_a=(2), beta=(3) over ℕ.
const char* kScalarNat = R"(
semiring: nat
alphabet: a
dim: 1
alpha: 1
M a:
2
beta: 3
)";

// Two-state ℕ automaton counting one 'a' then one 'b'.
const char* kNatAB = R"(
semiring: nat
alphabet: a b
dim: 2
alpha: 1 0
M a:
0 1
0 0
M b:
0 0
0 1
beta: 0 1
)";

}  // namespace

TEST_CASE("word matrix recursion") {
  const Automaton scalar = ts::aut(kScalarNat);
  CHECK(word_matrix(scalar, "") ==
        Matrix::identity(Semiring::naturals(), 1));
  CHECK(word_matrix(scalar, "aaa") ==
        ts::mat(Semiring::naturals(), 1, 1, {"8"}));

  const Automaton ab = ts::aut(kNatAB);
  CHECK(word_matrix(ab, "") == Matrix::identity(Semiring::naturals(), 2));
  CHECK(word_matrix(ab, "ab") ==
        ts::mat(Semiring::naturals(), 2, 2, {"0", "1", "0", "0"}));
  CHECK(word_matrix(ab, "ba") ==
        ts::mat(Semiring::naturals(), 2, 2, {"0", "0", "0", "0"}));
  CHECK_THROWS_AS(word_matrix(ab, "ax"), MismatchError);
}

TEST_CASE("behavior coefficients") {
  const Semiring& nat = Semiring::naturals();
  const Automaton scalar = ts::aut(kScalarNat);
  CHECK(nat.eq(behavior_coeff(scalar, "aa"), nat.parse("12")));

  const Automaton trop = ts::aut(R"(
semiring: tropical
alphabet: a
dim: 1
alpha: 0
M a:
4
beta: 0
)");
  CHECK(trop.semiring().eq(behavior_coeff(trop, "aaa"), Tropical::finite(12)));

  const Automaton ab = ts::aut(kNatAB);
  CHECK(nat.eq(behavior_coeff(ab, "ab"), nat.one()));
  CHECK(nat.eq(behavior_coeff(ab, "ba"), nat.zero()));
  CHECK_THROWS_AS(behavior_coeff(ab, "c"), MismatchError);
}

TEST_CASE("enumeration is length-lex and matches per-word evaluation") {
  const Automaton one_state = ts::aut(R"(
semiring: bool
alphabet: a
dim: 1
alpha: 1
M a:
1
beta: 1
)");
  const auto coeffs = enumerate_coeffs(one_state, 2);
  REQUIRE(coeffs.size() == 3);
  CHECK(coeffs[0].first == "");
  CHECK(coeffs[1].first == "a");
  CHECK(coeffs[2].first == "aa");
  for (const auto& [w, c] : coeffs)
    CHECK(one_state.semiring().eq(c, one_state.semiring().one()));

  const Automaton ab = ts::aut(kNatAB);
  const auto zero_len = enumerate_coeffs(ab, 0);
  REQUIRE(zero_len.size() == 1);
  CHECK(zero_len[0].first == "");
  CHECK(Semiring::naturals().eq(zero_len[0].second,
                                dot(ab.initial(), ab.final_vector())));

  const auto one_len = enumerate_coeffs(ab, 1);
  REQUIRE(one_len.size() == 3);
  CHECK(one_len[0].first == "");
  CHECK(one_len[1].first == "a");
  CHECK(one_len[2].first == "b");

  ts::Rng rng(11);
  for (const Semiring& s : {Semiring::naturals(), Semiring::rationals()}) {
    const Automaton a = ts::random_automaton(s, "ab", 3, rng);
    for (const auto& [w, c] : enumerate_coeffs(a, 4))
      CHECK(s.eq(c, behavior_coeff(a, w)));
  }
}

TEST_CASE("word matrices are multiplicative") {
  ts::Rng rng(12);
  for (const Semiring& s : {Semiring::naturals(), Semiring::integers(),
                            Semiring::rationals(), Semiring::tropical()}) {
    for (int i = 0; i < 30; ++i) {
      const std::size_t dim = 1 + ts::pick(rng, 4);
      const Automaton a = ts::random_automaton(s, "ab", dim, rng);
      const Word u = ts::random_word("ab", 3, rng);
      const Word v = ts::random_word("ab", 3, rng);
      CHECK(word_matrix(a, u + v) == word_matrix(a, u) * word_matrix(a, v));
    }
  }
}

TEST_CASE("Boolean support equals NFA subset-reachability") {
  ts::Rng rng(13);
  const Semiring& b = Semiring::boolean();
  for (int i = 0; i < 40; ++i) {
    const std::size_t dim = 1 + ts::pick(rng, 4);
    const Automaton a = ts::random_automaton(b, "ab", dim, rng);
    for (const auto& [w, c] : enumerate_coeffs(a, 5))
      CHECK(!b.is_zero(c) == ts::nfa_accepts(a, w));
  }
}

TEST_CASE("determinism flag") {
  CHECK(is_deterministic(ts::aut(R"(
semiring: bool
alphabet: a
dim: 2
alpha: 1 0
M a:
0 1
0 1
beta: 0 1
)")));
  // Two nonzero initial entries.
  CHECK_FALSE(is_deterministic(ts::aut(R"(
semiring: bool
alphabet: a
dim: 2
alpha: 1 1
M a:
0 1
0 1
beta: 0 1
)")));
  // Nonzero entry that is not one.
  CHECK_FALSE(is_deterministic(ts::aut(R"(
semiring: nat
alphabet: a
dim: 1
alpha: 2
M a:
1
beta: 1
)")));
  // Transition row with no nonzero entry.
  CHECK_FALSE(is_deterministic(ts::aut(R"(
semiring: bool
alphabet: a
dim: 1
alpha: 1
M a:
0
beta: 1
)")));
}

TEST_CASE("concurrent evaluation on shared inputs") {
  ts::Rng rng(14);
  const Automaton a = ts::random_automaton(Semiring::rationals(), "ab", 3, rng);
  const auto expected = enumerate_coeffs(a, 5);
  std::vector<int> mismatches(8, 0);
  std::vector<std::thread> workers;
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([&, t] {
      for (const auto& [w, c] : expected)
        if (!a.semiring().eq(behavior_coeff(a, w), c)) ++mismatches[t];
    });
  }
  for (auto& w : workers) w.join();
  for (int m : mismatches) CHECK(m == 0);
}

TEST_CASE("construction rejects malformed parts") {
  const Semiring& nat = Semiring::naturals();
  const Matrix alpha = ts::mat(nat, 1, 2, {"1", "0"});
  const Matrix beta = ts::mat(nat, 2, 1, {"0", "1"});
  const Matrix m = Matrix::identity(nat, 2);

  CHECK_THROWS_AS(Automaton("aa", alpha, {{'a', m}}, beta), MismatchError);
  CHECK_THROWS_AS(Automaton("ab", alpha, {{'a', m}}, beta), MismatchError);
  CHECK_THROWS_AS(Automaton("a", alpha, {{'a', Matrix(nat, 1, 1)}}, beta),
                  MismatchError);
  CHECK_THROWS_AS(
      Automaton("a", alpha, {{'a', Matrix(Semiring::boolean(), 2, 2)}}, beta),
      MismatchError);
  CHECK_THROWS_AS(Automaton("a", alpha, {{'a', m}}, Matrix(nat, 3, 1)),
                  MismatchError);
}
