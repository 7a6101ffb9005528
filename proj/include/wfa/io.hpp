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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "wfa/simulation.hpp"

namespace wfa {

// Text file formats. All files are whitespace-separated tokens with `#`
// comments running to end of line. Elements serialize as decimal integers,
// `p/q` rationals, `inf` for the tropical infinity, and table labels
// verbatim; parsing round-trips bit-exactly. Relative paths inside files
// resolve against the directory of the file that mentions them.
//
// Semiring table:    elements: e1 e2 …
//                    zero: ei
//                    one: ej
//                    add:   (then |S| rows of |S| labels)
//                    mul:   (likewise)
//
// Automaton:         semiring: bool|nat|int|rat|tropical|table <path>
//                    alphabet: a b …
//                    dim: n
//                    alpha: (n entries)
//                    M <letter>:  (n rows of n entries, once per letter)
//                    beta: (n entries)
//
// Simulation:        source: <automaton path>
//                    target: <automaton path>
//                    X:  (m rows of n entries)
//
// Chain:             automaton: <path>     (k+1 times, in order)
//                    link: forward|backward  followed by
//                    X:  (matrix rows)      (k times)

std::shared_ptr<const TableData> load_table_semiring(
    const std::filesystem::path& file);
void save_table_semiring(const TableData& t, const std::filesystem::path& file);

Automaton load_automaton(const std::filesystem::path& file);
/// Serializes to `file`. A table semiring is referenced by its origin path
/// (relative to the output directory); when the table has no origin, it is
/// written next to the automaton as `<file>.table` and referenced there.
void save_automaton(const Automaton& a, const std::filesystem::path& file);

std::string format_automaton(const Automaton& a,
                             const std::string& semiring_ref);
Automaton parse_automaton(std::istream& in, const std::string& display_name,
                          const std::filesystem::path& base_dir);

/// Loads a certificate file and the two automata it references, then
/// validates it (SimulationCertificate construction re-checks the
/// identities).
SimulationCertificate load_certificate(const std::filesystem::path& file);

/// Reads only the matrix of a certificate file, shaped m×n over s. Used when
/// the endpoints are supplied separately.
Matrix load_certificate_matrix(const std::filesystem::path& file,
                               const Semiring& s, std::size_t m,
                               std::size_t n);

void save_certificate(const Matrix& x, const std::filesystem::path& file,
                      const std::string& source_ref,
                      const std::string& target_ref);

ChainCertificate load_chain(const std::filesystem::path& file);

/// `automaton_refs` are the path strings written verbatim, one per chain
/// automaton.
void save_chain(const ChainCertificate& chain,
                const std::filesystem::path& file,
                const std::vector<std::string>& automaton_refs);

/// Path string for referencing `target` from a file living in `from_dir`.
std::string relative_ref(const std::filesystem::path& target,
                         const std::filesystem::path& from_dir);

}  // namespace wfa
