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

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wfa/elem.hpp"
#include "wfa/errors.hpp"

namespace wfa {

/// A finite semiring given by explicit operation tables over a list of
/// labelled elements. Construction checks shape only (sizes, index ranges,
/// label distinctness); the semiring axioms are checked separately by
/// validate_table_semiring.
class TableData {
 public:
  /// Throws ShapeError on malformed input: tables must be |S|×|S| row-major
  /// index tables with every entry < |S|, labels distinct and non-empty,
  /// zero/one indices in range.
  TableData(std::vector<std::string> labels, std::vector<std::uint32_t> add,
            std::vector<std::uint32_t> mul, std::uint32_t zero,
            std::uint32_t one);

  std::uint32_t size() const { return static_cast<std::uint32_t>(labels_.size()); }
  const std::string& label(std::uint32_t i) const { return labels_[i]; }
  std::optional<std::uint32_t> find(std::string_view label) const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return add_[a * size() + b];
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return mul_[a * size() + b];
  }
  std::uint32_t zero_index() const { return zero_; }
  std::uint32_t one_index() const { return one_; }

  bool same_content(const TableData& other) const;

  /// Provenance: the file this table was loaded from, when any. Used when
  /// emitted automata need to reference the table by path.
  const std::filesystem::path& origin() const { return origin_; }
  void set_origin(std::filesystem::path p) { origin_ = std::move(p); }

 private:
  std::vector<std::string> labels_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
  std::uint32_t zero_;
  std::uint32_t one_;
  std::filesystem::path origin_;
};

/// One violated semiring axiom with the witnessing elements. `witness` holds
/// the element indices bound by the axiom (in reading order), and lhs/rhs the
/// two table results that should have agreed.
struct TableViolation {
  enum class Axiom {
    zero_one_distinct,
    add_identity,
    add_commutative,
    add_associative,
    mul_identity,
    mul_associative,
    left_distributive,
    right_distributive,
    zero_absorbing,
  };
  enum class Side { na, left, right };

  Axiom axiom;
  Side side = Side::na;
  std::vector<std::uint32_t> witness;
  std::uint32_t lhs = 0;
  std::uint32_t rhs = 0;

  std::string describe(const TableData& t) const;
};

struct TableValidation {
  bool ok = true;
  std::vector<TableViolation> violations;
};

/// Exhaustively checks every semiring axiom over the table (|S|³ element
/// combinations for associativity and distributivity). Violations carry the
/// axiom and the witnessing elements; the report lists all of them in a fixed
/// deterministic order.
TableValidation validate_table_semiring(const TableData& t);

/// A concrete semiring instance: carrier representation, operations,
/// constants, decidable equality, and capability flags. Shipped instances are
/// 𝔹, ℕ, ℤ (arbitrary precision), ℚ (exact rationals), the tropical semiring
/// over 64-bit naturals with an ∞ sentinel, and validated table semirings.
/// Handles are cheap values; all semiring state is immutable and shared.
class Semiring {
 public:
  enum class Kind { boolean, naturals, integers, rationals, tropical, table };

  static const Semiring& boolean();
  static const Semiring& naturals();
  static const Semiring& integers();
  static const Semiring& rationals();
  static const Semiring& tropical();

  /// Wraps a shape-checked table as a semiring. Runs axiom validation and
  /// throws InvalidTableError when it fails; derives the capability flags
  /// (ring/field/commutative) and inverse tables from the validated table.
  static Semiring table(std::shared_ptr<const TableData> data);

  Kind kind() const { return kind_; }
  /// File-format keyword: "bool", "nat", "int", "rat", "tropical", "table".
  const std::string& name() const;

  bool is_finite() const;
  bool is_field() const;
  bool is_ring() const;
  bool is_commutative() const;

  Elem zero() const;
  Elem one() const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  bool eq(const Elem& a, const Elem& b) const { return elem_eq(a, b); }

  /// Additive inverse. Pre: is_ring().
  Elem negate(const Elem& a) const;
  Elem sub(const Elem& a, const Elem& b) const { return add(a, negate(b)); }
  /// Multiplicative inverse of a nonzero element. Pre: is_field().
  Elem invert(const Elem& a) const;
  Elem divide(const Elem& a, const Elem& b) const { return mul(a, invert(b)); }

  bool is_zero(const Elem& a) const { return eq(a, zero()); }
  bool is_one(const Elem& a) const { return eq(a, one()); }

  /// True when the element is a well-formed member of this carrier (right
  /// variant alternative, in range for ℕ / table indices).
  bool contains(const Elem& a) const;

  /// The explicit element list. Pre: is_finite().
  std::vector<Elem> carrier() const;

  std::string format(const Elem& a) const;
  /// Parses one serialized element. Throws std::invalid_argument with a bare
  /// message; file readers wrap it with position information.
  Elem parse(std::string_view token) const;

  const TableData* table_data() const { return table_.get(); }
  std::shared_ptr<const TableData> table_ptr() const { return table_; }

  /// Same semiring: same kind, and for tables, same content.
  friend bool operator==(const Semiring& a, const Semiring& b);

 private:
  explicit Semiring(Kind k) : kind_(k) {}

  Kind kind_;
  std::shared_ptr<const TableData> table_;
  // Derived once at table() time.
  bool table_commutative_ = false;
  bool table_ring_ = false;
  bool table_field_ = false;
  std::shared_ptr<const std::vector<std::uint32_t>> table_neg_;
  std::shared_ptr<const std::vector<std::uint32_t>> table_inv_;
};

}  // namespace wfa
