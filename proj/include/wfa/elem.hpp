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

#include <compare>
#include <cstdint>
#include <variant>

#include <gmpxx.h>

namespace wfa {

/// A tropical number: a 64-bit natural or +infinity. Canonical form keeps
/// the payload at 0 whenever the value is infinite, so member-wise equality
/// is value equality.
class Tropical {
 public:
  constexpr Tropical() = default;  // infinity

  static constexpr Tropical infinity() { return Tropical{}; }
  static constexpr Tropical finite(std::uint64_t v) {
    Tropical t;
    t.inf_ = false;
    t.n_ = v;
    return t;
  }

  constexpr bool is_inf() const { return inf_; }
  constexpr std::uint64_t value() const { return n_; }  // pre: !is_inf()

  friend constexpr bool operator==(const Tropical&, const Tropical&) = default;
  friend constexpr std::strong_ordering operator<=>(const Tropical& a,
                                                    const Tropical& b) {
    if (a.inf_ != b.inf_) return a.inf_ ? std::strong_ordering::greater
                                        : std::strong_ordering::less;
    return a.n_ <=> b.n_;
  }

 private:
  std::uint64_t n_ = 0;
  bool inf_ = true;
};

/// Index into the carrier of a table semiring.
struct TableRef {
  std::uint32_t index = 0;
  friend constexpr auto operator<=>(const TableRef&, const TableRef&) = default;
};

/// One semiring element. The active alternative is fixed by the owning
/// semiring: bool for 𝔹, mpz_class for ℕ/ℤ, mpq_class for ℚ, Tropical for
/// the tropical semiring, TableRef for table semirings. Canonical
/// representations make variant equality coincide with semiring equality.
using Elem = std::variant<bool, mpz_class, mpq_class, Tropical, TableRef>;

inline bool elem_eq(const Elem& a, const Elem& b) { return a == b; }

/// Total order used for canonical sorting and map keys; it has no semiring
/// meaning.
inline bool elem_less(const Elem& a, const Elem& b) { return a < b; }

}  // namespace wfa
