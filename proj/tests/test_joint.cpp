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

#include "support.hpp"
#include "wfa/joint.hpp"

using namespace wfa;

namespace {

void check_joint_contract(const JointResult& j, const Automaton& a,
                          const Automaton& b) {
  CHECK(check_simulation(j.joint, a, j.x).ok);
  CHECK(check_simulation(j.joint, b, j.y).ok);
  CHECK(j.x * a.final_vector() == j.joint.final_vector());
  CHECK(j.y * b.final_vector() == j.joint.final_vector());
  CHECK(ts::words_agree(j.joint, a, 6));
}

JointResult expect_joint(JointOutcome o) {
  REQUIRE(std::holds_alternative<JointResult>(o));
  return std::get<JointResult>(std::move(o));
}

InequivalenceWitness expect_witness(JointOutcome o) {
  REQUIRE(std::holds_alternative<InequivalenceWitness>(o));
  return std::get<InequivalenceWitness>(std::move(o));
}

// Boolean acceptors of a·a* with two different two-state layouts.
const char* kAStarFirst = R"(
semiring: bool
alphabet: a
dim: 2
alpha: 1 0
M a:
0 1
0 1
beta: 0 1
)";
const char* kAStarSecond = R"(
semiring: bool
alphabet: a
dim: 2
alpha: 0 1
M a:
1 0
1 0
beta: 1 0
)";

}  // namespace

TEST_CASE("finite mode: one-state fixed point") {
  const Automaton a = ts::aut(R"(
semiring: bool
alphabet: a
dim: 1
alpha: 1
M a:
1
beta: 1
)");
  const JointResult& j = expect_joint(joint_finite(a, a));
  const Semiring& s = a.semiring();
  CHECK(j.joint.dim() == 1);
  CHECK(j.joint.initial() == ts::mat(s, 1, 1, {"1"}));
  CHECK(j.joint.transition('a') == ts::mat(s, 1, 1, {"1"}));
  CHECK(j.joint.final_vector() == ts::mat(s, 1, 1, {"1"}));
  CHECK(j.x == ts::mat(s, 1, 1, {"1"}));
  CHECK(j.y == ts::mat(s, 1, 1, {"1"}));
  CHECK(j.generators.words == std::vector<Word>{""});
  check_joint_contract(j, a, a);
}

TEST_CASE("finite mode: two layouts of the same language") {
  const Automaton a = ts::aut(kAStarFirst);
  const Automaton b = ts::aut(kAStarSecond);
  const JointResult& j = expect_joint(joint_finite(a, b));
  CHECK(j.mode == JointMode::finite);
  CHECK(is_deterministic(j.joint));
  check_joint_contract(j, a, b);
  CHECK(ts::words_agree(j.joint, b, 5));
}

TEST_CASE("finite mode: witness for {a} vs {aa}") {
  const Automaton a = ts::aut(R"(
semiring: bool
alphabet: a
dim: 2
alpha: 1 0
M a:
0 1
0 0
beta: 0 1
)");
  const Automaton b = ts::aut(R"(
semiring: bool
alphabet: a
dim: 3
alpha: 1 0 0
M a:
0 1 0
0 0 1
0 0 0
beta: 0 0 1
)");
  const InequivalenceWitness& w = expect_witness(joint_finite(a, b));
  CHECK(w.word == "a");
  CHECK(a.semiring().eq(w.lhs, a.semiring().one()));
  CHECK(a.semiring().eq(w.rhs, a.semiring().zero()));
}

TEST_CASE("finite mode works over table semirings") {
  ts::Rng rng(31);
  const Semiring gf2 = ts::gf2();
  for (int i = 0; i < 20; ++i) {
    auto [a, b] = ts::equivalent_pair(gf2, "ab", 2, 3, rng);
    const JointResult& j = expect_joint(joint_finite(a, b));
    CHECK(is_deterministic(j.joint));
    check_joint_contract(j, a, b);
  }
}

TEST_CASE("field mode: the worked rationals example, exact outputs") {
  const Automaton a = ts::aut(R"(
semiring: rat
alphabet: a
dim: 2
alpha: 1 0
M a:
1 1
1 1
beta: 1 1
)");
  const Automaton b = ts::aut(R"(
semiring: rat
alphabet: a
dim: 1
alpha: 1
M a:
2
beta: 1
)");
  const JointResult& j = expect_joint(joint_field(a, b));
  const Semiring& s = a.semiring();
  CHECK(j.mode == JointMode::field);
  REQUIRE(j.joint.dim() == 2);
  CHECK(j.generators.words == std::vector<Word>{"", "a"});
  CHECK(j.x == ts::mat(s, 2, 2, {"1", "0", "1", "1"}));
  CHECK(j.y == ts::mat(s, 2, 1, {"1", "2"}));
  CHECK(j.joint.transition('a') == ts::mat(s, 2, 2, {"0", "1", "0", "2"}));
  CHECK(j.joint.initial() == ts::mat(s, 1, 2, {"1", "0"}));
  CHECK(j.joint.final_vector() == ts::mat(s, 2, 1, {"1", "2"}));
  check_joint_contract(j, a, b);
}

TEST_CASE("field mode: symmetric input simulates itself twice") {
  ts::Rng rng(32);
  const Semiring& q = Semiring::rationals();
  const Automaton a = ts::random_automaton(q, "ab", 3, rng);
  const JointResult& j = expect_joint(joint_field(a, a));
  CHECK(j.joint.dim() <= 2 * a.dim());
  check_joint_contract(j, a, a);
}

TEST_CASE("field mode: witness at the first differing word") {
  const Automaton a = ts::aut(R"(
semiring: rat
alphabet: a
dim: 1
alpha: 1
M a:
1
beta: 1
)");
  const Automaton b = ts::aut(R"(
semiring: rat
alphabet: a
dim: 1
alpha: 1
M a:
2
beta: 1
)");
  const InequivalenceWitness& w = expect_witness(joint_field(a, b));
  CHECK(w.word == "a");
  CHECK(a.semiring().eq(w.lhs, a.semiring().parse("1")));
  CHECK(a.semiring().eq(w.rhs, a.semiring().parse("2")));
}

TEST_CASE("field mode runs over table fields") {
  ts::Rng rng(33);
  for (const Semiring& s : {ts::gf2(), Semiring::table(ts::zmod_table(3)),
                            Semiring::table(ts::zmod_table(5))}) {
    REQUIRE(s.is_field());
    for (int i = 0; i < 10; ++i) {
      auto [a, b] = ts::equivalent_pair(s, "a", 2, 3, rng);
      const JointResult& j = expect_joint(joint_field(a, b));
      CHECK(j.joint.dim() <= a.dim() + b.dim());
      check_joint_contract(j, a, b);
    }
  }
}

TEST_CASE("field mode: all-zero initial vectors give the degenerate joint") {
  const Automaton a = ts::aut(R"(
semiring: rat
alphabet: a
dim: 1
alpha: 0
M a:
5
beta: 3
)");
  const Automaton b = ts::aut(R"(
semiring: rat
alphabet: a
dim: 2
alpha: 0 0
M a:
1 2
3 4
beta: 1 1
)");
  const JointResult& j = expect_joint(joint_field(a, b));
  CHECK(j.joint.dim() == 1);
  CHECK(j.generators.words.empty());
  CHECK(j.x.is_zero());
  check_joint_contract(j, a, b);
}

TEST_CASE("integer mode: one-state self-join with negative weight") {
  const Automaton a = ts::aut(R"(
semiring: int
alphabet: a
dim: 1
alpha: 1
M a:
-1
beta: 1
)");
  auto outcome = joint_integers(a, a, 64);
  REQUIRE(std::holds_alternative<JointResult>(outcome));
  const JointResult& j = std::get<JointResult>(outcome);
  CHECK(j.joint.dim() == 1);
  CHECK(j.joint.transition('a') == ts::mat(a.semiring(), 1, 1, {"-1"}));
  check_joint_contract(j, a, a);
}

TEST_CASE("integer mode: redundant dim-2 vs dim-1 sign automaton") {
  const Automaton a = ts::aut(R"(
semiring: int
alphabet: a
dim: 2
alpha: 1 0
M a:
0 -1
-1 0
beta: 1 1
)");
  const Automaton b = ts::aut(R"(
semiring: int
alphabet: a
dim: 1
alpha: 1
M a:
-1
beta: 1
)");
  REQUIRE(ts::words_agree(a, b, 6));
  auto outcome = joint_integers(a, b, 64);
  REQUIRE(std::holds_alternative<JointResult>(outcome));
  check_joint_contract(std::get<JointResult>(outcome), a, b);
}

TEST_CASE("integer mode: witness") {
  const Automaton a = ts::aut(R"(
semiring: int
alphabet: a
dim: 1
alpha: 1
M a:
2
beta: 1
)");
  const Automaton b = ts::aut(R"(
semiring: int
alphabet: a
dim: 1
alpha: 1
M a:
3
beta: 1
)");
  auto outcome = joint_integers(a, b, 64);
  REQUIRE(std::holds_alternative<InequivalenceWitness>(outcome));
  const auto& w = std::get<InequivalenceWitness>(outcome);
  CHECK(w.word == "a");
  CHECK(a.semiring().eq(w.lhs, a.semiring().parse("2")));
  CHECK(a.semiring().eq(w.rhs, a.semiring().parse("3")));
}

TEST_CASE("integer mode: cap exhaustion is inconclusive, then resolves") {
  // Three-stage shift needs closure depth 2.
  const Automaton a = ts::aut(R"(
semiring: int
alphabet: a
dim: 3
alpha: 1 0 0
M a:
0 1 0
0 0 1
0 0 0
beta: 0 0 1
)");
  auto capped = joint_integers(a, a, 1);
  REQUIRE(std::holds_alternative<CapExhausted>(capped));
  CHECK(std::get<CapExhausted>(capped).cap == 1);

  auto full = joint_integers(a, a, 64);
  REQUIRE(std::holds_alternative<JointResult>(full));
  CHECK(std::get<JointResult>(full).closure_depth == 2);
}

TEST_CASE("integer mode with composite and large weights") {
  // Non-unit lattice pivots: all reachable pairs share the factor 2.
  const Automaton a = ts::aut(R"(
semiring: int
alphabet: a
dim: 2
alpha: 2 0
M a:
0 1
3 0
beta: 5 -7
)");
  auto o = joint_integers(a, a, 64);
  REQUIRE(std::holds_alternative<JointResult>(o));
  check_joint_contract(std::get<JointResult>(o), a, a);

  // Weights far beyond machine words.
  const Automaton base = ts::aut(R"(
semiring: int
alphabet: a b
dim: 2
alpha: 1000000000000003 -2
M a:
0 999999999999999
-6 14
M b:
10 0
0 -1000000000000000000000
beta: 35 1
)");
  ts::Rng rng(39);
  const Automaton lhs = ts::expand(base, 3, rng).source;
  const Automaton rhs = ts::expand(base, 3, rng).source;
  auto big = joint_integers(lhs, rhs, 64);
  REQUIRE(std::holds_alternative<JointResult>(big));
  check_joint_contract(std::get<JointResult>(big), lhs, rhs);
}

TEST_CASE("unsupported semirings are rejected with the mode table") {
  const Automaton nat = ts::aut(R"(
semiring: nat
alphabet: a
dim: 1
alpha: 1
M a:
1
beta: 1
)");
  const Automaton trop = ts::aut(R"(
semiring: tropical
alphabet: a
dim: 1
alpha: 0
M a:
1
beta: 0
)");
  CHECK_THROWS_AS(joint_finite(nat, nat), UnsupportedSemiringError);
  CHECK_THROWS_AS(joint_field(nat, nat), UnsupportedSemiringError);
  CHECK_THROWS_AS(joint_integers(nat, nat, 8), UnsupportedSemiringError);
  CHECK_THROWS_AS(joint_finite(trop, trop), UnsupportedSemiringError);
  CHECK_THROWS_AS(joint_field(trop, trop), UnsupportedSemiringError);
  CHECK_THROWS_AS(joint_integers(trop, trop, 8), UnsupportedSemiringError);

  const Automaton b1 = ts::aut(R"(
semiring: bool
alphabet: a
dim: 1
alpha: 1
M a:
1
beta: 1
)");
  const Automaton b2 = ts::aut(R"(
semiring: bool
alphabet: b
dim: 1
alpha: 1
M b:
1
beta: 1
)");
  CHECK_THROWS_AS(joint_finite(b1, b2), MismatchError);
  CHECK_THROWS_AS(joint_finite(b1, nat), MismatchError);
}

TEST_CASE("emit_chain wraps the joint as a verifiable two-link chain") {
  const Automaton a = ts::aut(R"(
semiring: rat
alphabet: a
dim: 2
alpha: 1 0
M a:
1 1
1 1
beta: 1 1
)");
  const Automaton b = ts::aut(R"(
semiring: rat
alphabet: a
dim: 1
alpha: 1
M a:
2
beta: 1
)");
  const JointResult& j = expect_joint(joint_field(a, b));
  const ChainCertificate chain = emit_chain(j, a, b);
  REQUIRE(chain.automata.size() == 3);
  REQUIRE(chain.links.size() == 2);
  CHECK(chain.links[0].dir == Direction::backward);
  CHECK(chain.links[1].dir == Direction::forward);
  CHECK(verify_chain(chain, a, b).ok);

  ChainCertificate corrupted = chain;
  corrupted.links[0].x(0, 0) = a.semiring().parse("9");
  const ChainReport r = verify_chain(corrupted, a, b);
  REQUIRE_FALSE(r.ok);
  CHECK(r.failure == ChainReport::Failure::link);
  CHECK(r.link_index == 0);
}

TEST_CASE("self-join over the Booleans emits the 1x1 identity chain") {
  const Automaton a = ts::aut(R"(
semiring: bool
alphabet: a
dim: 1
alpha: 1
M a:
1
beta: 1
)");
  const JointResult& j = expect_joint(joint_finite(a, a));
  const ChainCertificate chain = emit_chain(j, a, a);
  CHECK(chain.links[0].x == ts::mat(a.semiring(), 1, 1, {"1"}));
  CHECK(chain.links[1].x == ts::mat(a.semiring(), 1, 1, {"1"}));
  CHECK(verify_chain(chain, a, a).ok);
}

TEST_CASE("random equivalent pairs: finite mode") {
  ts::Rng rng(34);
  for (const Semiring& s : {Semiring::boolean(), ts::gf2()}) {
    for (int i = 0; i < 40; ++i) {
      auto [a, b] = ts::equivalent_pair(s, "ab", 1 + ts::pick(rng, 2), 3, rng);
      const JointResult& j = expect_joint(joint_finite(a, b));
      CHECK(is_deterministic(j.joint));
      CHECK(is_unit_vector(j.joint.initial()));
      check_joint_contract(j, a, b);
    }
  }
}

TEST_CASE("random equivalent pairs: field mode with the algebra re-checked") {
  ts::Rng rng(35);
  const Semiring& q = Semiring::rationals();
  for (int i = 0; i < 40; ++i) {
    auto [a, b] = ts::equivalent_pair(q, "ab", 1 + ts::pick(rng, 2), 4, rng);
    const JointResult& j = expect_joint(joint_field(a, b));
    const std::size_t p = j.joint.dim();
    CHECK(p <= a.dim() + b.dim());
    check_joint_contract(j, a, b);
    if (j.generators.words.empty()) continue;  // degenerate all-zero seed

    // Generator rows are linearly independent: an elimination written in the
    // tests confirms full rank.
    std::vector<std::vector<mpq_class>> rows;
    for (std::size_t r = 0; r < p; ++r) {
      std::vector<mpq_class> row;
      for (std::size_t c = 0; c < a.dim(); ++c)
        row.push_back(std::get<mpq_class>(j.generators.left(r, c)));
      for (std::size_t c = 0; c < b.dim(); ++c)
        row.push_back(std::get<mpq_class>(j.generators.right(r, c)));
      rows.push_back(std::move(row));
    }
    CHECK(ts::mpq_rank(rows) == p);

    // The defining linear identities, by direct substitution: each
    // successor row equals its combination of the generators, and the
    // initial pair equals the kappa combination.
    const Matrix gen_all = hconcat(j.generators.left, j.generators.right);
    for (char letter : a.alphabet()) {
      const Matrix succ_left = j.generators.left * a.transition(letter);
      const Matrix succ_right = j.generators.right * b.transition(letter);
      CHECK(j.joint.transition(letter) * gen_all ==
            hconcat(succ_left, succ_right));
    }
    CHECK(j.joint.initial() * gen_all ==
          hconcat(a.initial(), b.initial()));
  }
}

TEST_CASE("random equivalent pairs: integer mode") {
  ts::Rng rng(36);
  const Semiring& z = Semiring::integers();
  for (int i = 0; i < 30; ++i) {
    auto [a, b] = ts::equivalent_pair(z, "ab", 1 + ts::pick(rng, 2), 3, rng);
    auto outcome = joint_integers(a, b, 64);
    REQUIRE(std::holds_alternative<JointResult>(outcome));
    check_joint_contract(std::get<JointResult>(outcome), a, b);
  }
}

TEST_CASE("finite and field closures agree over GF(2)") {
  // GF(2) is both finite and a field, so the two independent constructions
  // must reach the same verdict, down to the first differing word.
  ts::Rng rng(38);
  const Semiring gf2 = ts::gf2();
  int witnesses = 0;
  for (int i = 0; i < 60; ++i) {
    const Automaton a =
        ts::random_automaton(gf2, "ab", 1 + ts::pick(rng, 3), rng);
    const Automaton b =
        ts::coin(rng)
            ? ts::random_automaton(gf2, "ab", 1 + ts::pick(rng, 3), rng)
            : ts::equivalent_pair(gf2, "ab", 1 + ts::pick(rng, 2), 3, rng)
                  .second;
    const JointOutcome finite = joint_finite(a, b);
    const JointOutcome field = joint_field(a, b);
    REQUIRE(finite.index() == field.index());
    if (const auto* w = std::get_if<InequivalenceWitness>(&finite)) {
      ++witnesses;
      CHECK(w->word == std::get<InequivalenceWitness>(field).word);
    } else {
      check_joint_contract(std::get<JointResult>(finite), a, b);
      check_joint_contract(std::get<JointResult>(field), a, b);
    }
  }
  CHECK(witnesses > 0);  // the mix must exercise both arms
}

TEST_CASE("perturbed pairs yield witnesses that recompute") {
  ts::Rng rng(37);
  int produced = 0;
  while (produced < 40) {
    const Semiring& s = ts::coin(rng)
                            ? Semiring::boolean()
                            : static_cast<const Semiring&>(
                                  Semiring::rationals());
    auto [a, b0] = ts::equivalent_pair(s, "ab", 1 + ts::pick(rng, 2), 3, rng);
    const Automaton b = ts::perturb(b0, rng);
    // Keep only pairs the independent word oracle already separates.
    if (ts::words_agree(a, b, a.dim() + b.dim() + 2)) continue;
    ++produced;
    const JointOutcome o = s.is_finite() ? joint_finite(a, b)
                                         : joint_field(a, b);
    const InequivalenceWitness& w = expect_witness(o);
    CHECK(s.eq(behavior_coeff(a, w.word), w.lhs));
    CHECK(s.eq(behavior_coeff(b, w.word), w.rhs));
    CHECK_FALSE(s.eq(w.lhs, w.rhs));
  }
}
