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
#include <optional>
#include <string>

#include "wfa/joint.hpp"

namespace wfa {

/// Bounds for the semidecision searches. max_intermediate_dim = 0 means
/// "m+n of the inputs". For the tropical probe, max_steps doubles as the
/// finite entry bound of the simulation search.
struct Budget {
  std::size_t max_word_len = 12;
  std::size_t max_chain_len = 2;
  std::size_t max_intermediate_dim = 0;
  std::size_t max_steps = 1'000'000;
  std::size_t integer_cap = 64;
};

/// Human-readable table of the default budget fields.
std::string explain_budget();

struct Verdict {
  enum class Kind { equivalent, inequivalent, inconclusive };

  Kind kind;
  std::optional<ChainCertificate> chain;        // equivalent
  std::optional<InequivalenceWitness> witness;  // inequivalent
  std::string detail;
};

/// Enumerates words in length-lexicographic order up to budget.max_word_len
/// and returns the first word whose coefficients differ, or nullopt when the
/// budget is exhausted without finding one.
std::optional<InequivalenceWitness> semidecide_inequivalent(
    const Automaton& a, const Automaton& b, const Budget& budget);

/// Exhaustive bounded search for a chain of simulations connecting a and b
/// over a finite semiring: chain lengths 0..max_chain_len, intermediate
/// dimensions 1..max_intermediate_dim, every matrix and intermediate
/// automaton entry drawn from the carrier, in a fixed deterministic order
/// (length, then dimensions, then entries odometer-style in carrier order,
/// forward before backward per link). Each candidate is validated through
/// verify_chain; max_steps bounds the number of candidates tried. Intended
/// for tiny instances; the space grows as |S|^O(d²).
std::optional<ChainCertificate> search_chain_finite(const Automaton& a,
                                                    const Automaton& b,
                                                    const Budget& budget);

/// The decision procedure. Dispatch: finite semirings and fields get the
/// total joint construction, ℤ the capped integer construction; other
/// semirings fall back to the interleaved semidecision loop and may return
/// inconclusive. Equivalent verdicts always carry the A ← C → B chain;
/// every verdict's evidence is re-verified before it is returned.
Verdict decide_equiv(const Automaton& a, const Automaton& b,
                     const Budget& budget);

/// Desk-scale probe of the tropical semiring: runs the inequivalence
/// semidecision, then exhaustively searches for a single simulation matrix
/// in each direction with entries drawn from {0..bound, ∞} where
/// bound = budget.max_steps. The neither-found case is an illustration
/// within the stated bounds, explicitly not a proof of non-existence.
struct TropicalProbeReport {
  std::optional<InequivalenceWitness> witness;
  std::size_t word_bound = 0;
  std::size_t entry_bound = 0;
  std::optional<Matrix> forward_sim;   // A → B
  std::optional<Matrix> backward_sim;  // B → A

  std::string summary(const Semiring& s) const;
};

TropicalProbeReport tropical_probe(const Automaton& a, const Automaton& b,
                                   const Budget& budget);

}  // namespace wfa
