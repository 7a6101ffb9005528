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

#include "wfa/simulation.hpp"

#include <utility>

namespace wfa {

namespace {

/// Row-major first mismatch between two equal-shaped matrices.
std::optional<SimViolation> first_mismatch(const Matrix& lhs,
                                           const Matrix& rhs,
                                           SimViolation::Part part,
                                           char letter) {
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t j = 0; j < lhs.cols(); ++j)
      if (!elem_eq(lhs(i, j), rhs(i, j)))
        return SimViolation{part, letter, i, j, lhs(i, j), rhs(i, j)};
  return std::nullopt;
}

}  // namespace

std::string SimViolation::describe(const Semiring& s) const {
  std::string where;
  switch (part) {
    case Part::initial:
      where = "initial identity (alpha·X vs gamma)";
      break;
    case Part::transition:
      where = std::string("transition identity for '") + letter +
              "' (M·X vs X·N)";
      break;
    case Part::final_vector:
      where = "final identity (beta vs X·delta)";
      break;
  }
  return where + " at entry (" + std::to_string(row) + "," +
         std::to_string(col) + "): " + s.format(lhs) + " vs " + s.format(rhs);
}

SimReport check_simulation(const Automaton& a, const Automaton& b,
                           const Matrix& x) {
  if (!(a.semiring() == b.semiring()) || !(a.semiring() == x.semiring()))
    throw MismatchError("simulation check across different semirings");
  if (a.alphabet() != b.alphabet())
    throw MismatchError("simulation check across different alphabets");
  if (x.rows() != a.dim() || x.cols() != b.dim())
    throw MismatchError("simulation matrix must be dim(A) x dim(B)");

  SimReport report;
  using Part = SimViolation::Part;
  if (auto v = first_mismatch(a.initial() * x, b.initial(), Part::initial, 0)) {
    report.ok = false;
    report.violation = std::move(v);
    return report;
  }
  for (char letter : a.alphabet()) {
    if (auto v = first_mismatch(a.transition(letter) * x,
                                x * b.transition(letter), Part::transition,
                                letter)) {
      report.ok = false;
      report.violation = std::move(v);
      return report;
    }
  }
  if (auto v = first_mismatch(a.final_vector(), x * b.final_vector(),
                              Part::final_vector, 0)) {
    report.ok = false;
    report.violation = std::move(v);
    return report;
  }
  return report;
}

SimulationCertificate::SimulationCertificate(Automaton source,
                                             Automaton target, Matrix x)
    : source_(std::move(source)), target_(std::move(target)), x_(std::move(x)) {
  const SimReport r = check_simulation(source_, target_, x_);
  if (!r.ok)
    throw InvalidCertificate(
        "certificate is not a simulation: " +
            r.violation->describe(source_.semiring()),
        *r.violation);
}

SimulationCertificate compose(const SimulationCertificate& c1,
                              const SimulationCertificate& c2) {
  if (!(c1.target() == c2.source()))
    throw MismatchError(
        "compose: first certificate's target differs from second's source");
  return SimulationCertificate(c1.source(), c2.target(),
                               c1.matrix() * c2.matrix());
}

ChainReport verify_chain(const ChainCertificate& chain, const Automaton& a,
                         const Automaton& b) {
  ChainReport report;
  if (chain.automata.empty() ||
      chain.links.size() + 1 != chain.automata.size()) {
    report.failure = ChainReport::Failure::shape;
    report.message = "chain must have k+1 automata and k links";
    return report;
  }
  if (!(chain.automata.front() == a)) {
    report.failure = ChainReport::Failure::endpoint_first;
    report.message = "chain's first automaton is not A";
    return report;
  }
  if (!(chain.automata.back() == b)) {
    report.failure = ChainReport::Failure::endpoint_last;
    report.message = "chain's last automaton is not B";
    return report;
  }
  for (std::size_t i = 0; i < chain.links.size(); ++i) {
    const ChainLink& link = chain.links[i];
    const Automaton& src = link.dir == Direction::forward
                               ? chain.automata[i]
                               : chain.automata[i + 1];
    const Automaton& dst = link.dir == Direction::forward
                               ? chain.automata[i + 1]
                               : chain.automata[i];
    const SimReport r = check_simulation(src, dst, link.x);
    if (!r.ok) {
      report.failure = ChainReport::Failure::link;
      report.link_index = i;
      report.violation = r.violation;
      report.message = "link " + std::to_string(i) + " (" +
                       (link.dir == Direction::forward ? "forward" : "backward") +
                       ") failed: " + r.violation->describe(a.semiring());
      return report;
    }
  }
  report.ok = true;
  report.failure = ChainReport::Failure::none;
  report.message =
      "chain valid; the endpoint automata have equal behavior on every word";
  return report;
}

}  // namespace wfa
