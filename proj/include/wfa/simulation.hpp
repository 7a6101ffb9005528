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
#include <vector>

#include "wfa/automaton.hpp"

namespace wfa {

/// First violated simulation identity. Identities are checked in the fixed
/// order initial, transitions in alphabet order, final; within a matrix
/// identity, the witness is the row-major first mismatching entry.
struct SimViolation {
  enum class Part { initial, transition, final_vector };
  Part part;
  char letter = 0;  // meaningful for Part::transition
  std::size_t row = 0;
  std::size_t col = 0;
  Elem lhs;
  Elem rhs;

  std::string describe(const Semiring& s) const;
};

struct SimReport {
  bool ok = true;
  std::optional<SimViolation> violation;
};

/// Checks whether x is a simulation from a (dim m) to b (dim n): the initial
/// rows, per-letter transition matrices, and final columns must satisfy the
/// three identity families exactly. Throws MismatchError when the automata
/// differ in semiring or alphabet or x is not m×n; a failed identity is a
/// report, not an error.
SimReport check_simulation(const Automaton& a, const Automaton& b,
                           const Matrix& x);

/// A validated simulation: source →^X target. Constructing one re-checks the
/// identities and throws InvalidCertificate when they do not hold.
class SimulationCertificate {
 public:
  class InvalidCertificate : public std::runtime_error {
   public:
    InvalidCertificate(std::string message, SimViolation v)
        : std::runtime_error(std::move(message)), violation(std::move(v)) {}
    SimViolation violation;
  };

  SimulationCertificate(Automaton source, Automaton target, Matrix x);

  const Automaton& source() const { return source_; }
  const Automaton& target() const { return target_; }
  const Matrix& matrix() const { return x_; }

 private:
  Automaton source_;
  Automaton target_;
  Matrix x_;
};

/// Composition of A→B and B→C into A→C with the product matrix. Throws
/// MismatchError when c1's target and c2's source differ.
SimulationCertificate compose(const SimulationCertificate& c1,
                              const SimulationCertificate& c2);

/// Link direction between consecutive chain automata C_i and C_{i+1}:
/// forward means C_i →^X C_{i+1}, backward means C_{i+1} →^X C_i.
enum class Direction { forward, backward };

struct ChainLink {
  Direction dir;
  Matrix x;
};

/// A chain of simulations connecting two automata: k+1 automata and k links.
/// Not validated on construction; verify_chain produces the report.
struct ChainCertificate {
  std::vector<Automaton> automata;
  std::vector<ChainLink> links;
};

struct ChainReport {
  enum class Failure {
    none,
    shape,           // automata/link counts inconsistent or chain empty
    endpoint_first,  // chain's first automaton differs from A
    endpoint_last,   // chain's last automaton differs from B
    link,            // a link failed check_simulation
  };

  bool ok = false;
  Failure failure = Failure::none;
  std::size_t link_index = 0;
  std::optional<SimViolation> violation;
  std::string message;
};

/// Verifies that the chain connects a to b: endpoints must equal a and b
/// structurally and every link must pass check_simulation in its stated
/// direction. A passing report states the consequence: the endpoint
/// behaviors coincide on every word.
ChainReport verify_chain(const ChainCertificate& chain, const Automaton& a,
                         const Automaton& b);

}  // namespace wfa
