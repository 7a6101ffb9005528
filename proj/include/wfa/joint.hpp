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
#include <string>
#include <variant>
#include <vector>

#include "wfa/simulation.hpp"

namespace wfa {

/// The generator pairs (left_i | right_i) discovered by the closure, with the
/// word that produced each pair, in breadth-first (length-lexicographic)
/// discovery order. In finite mode every pair is literally the reachable
/// vector pair of its word; in field/integer mode the stored pairs are also
/// literal word pairs, kept only when outside the span of the earlier ones.
struct GeneratorSet {
  std::vector<Word> words;
  Matrix left;   // p×m, rows are the source-side vectors
  Matrix right;  // p×n, rows are the target-side vectors
};

enum class JointMode { finite, field, integer };

std::string to_string(JointMode m);

/// The constructed joint automaton C with its two outgoing simulations
/// C →^X A and C →^Y B. Both certificates hold by construction and are
/// re-checked before the result is returned; in finite mode C is
/// deterministic. closure_depth is the word length at which the closure
/// stabilized.
struct JointResult {
  Automaton joint;
  Matrix x;  // p×m
  Matrix y;  // p×n
  GeneratorSet generators;
  JointMode mode;
  std::size_t closure_depth = 0;
};

/// A word on which the two input automata disagree, with both coefficients.
/// Verified by recomputation before being returned.
struct InequivalenceWitness {
  Word word;
  Elem lhs;
  Elem rhs;
};

/// The integer-mode closure did not stabilize within the iteration cap.
/// Inconclusive by construction, never evidence of inequivalence.
struct CapExhausted {
  std::size_t cap = 0;
  std::size_t generators = 0;
};

using JointOutcome = std::variant<JointResult, InequivalenceWitness>;
using JointIntegerOutcome =
    std::variant<JointResult, InequivalenceWitness, CapExhausted>;

/// Finite-semiring construction: closes {(initial_A, initial_B)} under the
/// per-letter successor map as a set of exact vector pairs, which stabilizes
/// in at most |S|^(m+n) pairs; the resulting joint automaton is
/// deterministic. Throws UnsupportedSemiringError unless the common semiring
/// is finite, MismatchError on alphabet/semiring mismatch.
JointOutcome joint_finite(const Automaton& a, const Automaton& b);

/// Field construction: maintains a linearly independent generator list
/// spanning the reachable pair space, extends with successors outside the
/// current span (membership by exact elimination, at most m+n generators),
/// then solves for the joint transitions and initial vector by exact linear
/// solve against the generators. Requires a semiring flagged as a field (ℚ,
/// or a table semiring that validates as a field).
JointOutcome joint_field(const Automaton& a, const Automaton& b);

/// Integer-ring construction: tracks the ℤ-module generated by the reachable
/// pairs in Hermite-normal-form basis and extends with successors until the
/// module stabilizes; coefficients are recovered through the recorded
/// HNF transformation. `cap` bounds the closure depth (safety valve only;
/// stabilization is guaranteed). Requires the ℤ semiring.
JointIntegerOutcome joint_integers(const Automaton& a, const Automaton& b,
                                   std::size_t cap);

/// Wraps a joint result as the two-link chain A ← C → B.
ChainCertificate emit_chain(const JointResult& j, const Automaton& a,
                            const Automaton& b);

}  // namespace wfa
