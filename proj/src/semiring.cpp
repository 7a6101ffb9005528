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

#include "wfa/semiring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>
#include <stdexcept>

namespace wfa {

namespace {

constexpr std::uint32_t kNoElement = std::numeric_limits<std::uint32_t>::max();

bool valid_integer_token(std::string_view t, bool allow_sign) {
  if (t.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (t[i] < '0' || t[i] > '9') return false;
  return true;
}

}  // namespace

TableData::TableData(std::vector<std::string> labels,
                     std::vector<std::uint32_t> add,
                     std::vector<std::uint32_t> mul, std::uint32_t zero,
                     std::uint32_t one)
    : labels_(std::move(labels)),
      add_(std::move(add)),
      mul_(std::move(mul)),
      zero_(zero),
      one_(one) {
  const std::size_t n = labels_.size();
  if (n == 0) throw ShapeError("table semiring needs at least one element");
  if (add_.size() != n * n || mul_.size() != n * n)
    throw ShapeError("operation tables must be |S| x |S|");
  for (std::uint32_t v : add_)
    if (v >= n) throw ShapeError("add table entry out of range");
  for (std::uint32_t v : mul_)
    if (v >= n) throw ShapeError("mul table entry out of range");
  if (zero_ >= n || one_ >= n)
    throw ShapeError("zero/one index out of range");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw ShapeError("empty element label");
    for (char c : l)
      if (c == '#' || c == ':' || std::isspace(static_cast<unsigned char>(c)))
        throw ShapeError("label '" + l + "' contains '#', ':' or whitespace");
    if (!seen.insert(l).second)
      throw ShapeError("duplicate element label '" + l + "'");
  }
}

std::optional<std::uint32_t> TableData::find(std::string_view label) const {
  for (std::uint32_t i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

bool TableData::same_content(const TableData& other) const {
  return labels_ == other.labels_ && add_ == other.add_ &&
         mul_ == other.mul_ && zero_ == other.zero_ && one_ == other.one_;
}

std::string TableViolation::describe(const TableData& t) const {
  auto l = [&](std::uint32_t i) { return t.label(i); };
  const std::string a = witness.size() > 0 ? l(witness[0]) : "";
  const std::string b = witness.size() > 1 ? l(witness[1]) : "";
  const std::string c = witness.size() > 2 ? l(witness[2]) : "";
  auto neq = [&](std::string lhs_expr, std::string rhs_expr) {
    return lhs_expr + " = " + l(lhs) + " but " + rhs_expr + " = " + l(rhs);
  };
  switch (axiom) {
    case Axiom::zero_one_distinct:
      return "trivial semiring: zero and one are the same element '" + l(lhs) +
             "'";
    case Axiom::add_identity:
      return "additive identity: " +
             neq(side == Side::left ? "0+" + a : a + "+0", "expected");
    case Axiom::add_commutative:
      return "additive commutativity: " + neq(a + "+" + b, b + "+" + a);
    case Axiom::add_associative:
      return "additive associativity: " +
             neq("(" + a + "+" + b + ")+" + c, a + "+(" + b + "+" + c + ")");
    case Axiom::mul_identity:
      return "multiplicative identity: " +
             neq(side == Side::left ? "1*" + a : a + "*1", "expected");
    case Axiom::mul_associative:
      return "multiplicative associativity: " +
             neq("(" + a + "*" + b + ")*" + c, a + "*(" + b + "*" + c + ")");
    case Axiom::left_distributive:
      return "left distributivity: " +
             neq(a + "*(" + b + "+" + c + ")", a + "*" + b + "+" + a + "*" + c);
    case Axiom::right_distributive:
      return "right distributivity: " +
             neq("(" + a + "+" + b + ")*" + c, a + "*" + c + "+" + b + "*" + c);
    case Axiom::zero_absorbing:
      return "absorbing zero: " +
             neq(side == Side::left ? "0*" + a : a + "*0", "expected");
  }
  return "unknown axiom";
}

TableValidation validate_table_semiring(const TableData& t) {
  TableValidation report;
  const std::uint32_t n = t.size();
  const std::uint32_t z = t.zero_index();
  const std::uint32_t o = t.one_index();
  auto fail = [&](TableViolation v) {
    report.ok = false;
    report.violations.push_back(std::move(v));
  };
  using Ax = TableViolation::Axiom;
  using Side = TableViolation::Side;

  if (z == o)
    fail({Ax::zero_one_distinct, Side::na, {}, z, o});

  for (std::uint32_t a = 0; a < n; ++a) {
    if (t.add(z, a) != a)
      fail({Ax::add_identity, Side::left, {a}, t.add(z, a), a});
    if (t.add(a, z) != a)
      fail({Ax::add_identity, Side::right, {a}, t.add(a, z), a});
    if (t.mul(o, a) != a)
      fail({Ax::mul_identity, Side::left, {a}, t.mul(o, a), a});
    if (t.mul(a, o) != a)
      fail({Ax::mul_identity, Side::right, {a}, t.mul(a, o), a});
    if (t.mul(z, a) != z)
      fail({Ax::zero_absorbing, Side::left, {a}, t.mul(z, a), z});
    if (t.mul(a, z) != z)
      fail({Ax::zero_absorbing, Side::right, {a}, t.mul(a, z), z});
  }

  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b)
      if (t.add(a, b) != t.add(b, a))
        fail({Ax::add_commutative, Side::na, {a, b}, t.add(a, b), t.add(b, a)});

  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c) {
        const std::uint32_t add_l = t.add(t.add(a, b), c);
        const std::uint32_t add_r = t.add(a, t.add(b, c));
        if (add_l != add_r)
          fail({Ax::add_associative, Side::na, {a, b, c}, add_l, add_r});
        const std::uint32_t mul_l = t.mul(t.mul(a, b), c);
        const std::uint32_t mul_r = t.mul(a, t.mul(b, c));
        if (mul_l != mul_r)
          fail({Ax::mul_associative, Side::na, {a, b, c}, mul_l, mul_r});
        const std::uint32_t ld_l = t.mul(a, t.add(b, c));
        const std::uint32_t ld_r = t.add(t.mul(a, b), t.mul(a, c));
        if (ld_l != ld_r)
          fail({Ax::left_distributive, Side::na, {a, b, c}, ld_l, ld_r});
        const std::uint32_t rd_l = t.mul(t.add(a, b), c);
        const std::uint32_t rd_r = t.add(t.mul(a, c), t.mul(b, c));
        if (rd_l != rd_r)
          fail({Ax::right_distributive, Side::na, {a, b, c}, rd_l, rd_r});
      }

  return report;
}

const Semiring& Semiring::boolean() {
  static const Semiring s{Kind::boolean};
  return s;
}
const Semiring& Semiring::naturals() {
  static const Semiring s{Kind::naturals};
  return s;
}
const Semiring& Semiring::integers() {
  static const Semiring s{Kind::integers};
  return s;
}
const Semiring& Semiring::rationals() {
  static const Semiring s{Kind::rationals};
  return s;
}
const Semiring& Semiring::tropical() {
  static const Semiring s{Kind::tropical};
  return s;
}

Semiring Semiring::table(std::shared_ptr<const TableData> data) {
  if (!data) throw ShapeError("null table");
  const auto validation = validate_table_semiring(*data);
  if (!validation.ok) {
    std::string msg = "table is not a semiring:";
    for (const auto& v : validation.violations) {
      msg += "\n  " + v.describe(*data);
    }
    throw InvalidTableError(msg);
  }
  Semiring s{Kind::table};
  s.table_ = std::move(data);
  const TableData& t = *s.table_;
  const std::uint32_t n = t.size();
  const std::uint32_t z = t.zero_index();
  const std::uint32_t o = t.one_index();

  s.table_commutative_ = true;
  for (std::uint32_t a = 0; a < n && s.table_commutative_; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b)
      if (t.mul(a, b) != t.mul(b, a)) {
        s.table_commutative_ = false;
        break;
      }

  auto neg = std::make_shared<std::vector<std::uint32_t>>(n, kNoElement);
  s.table_ring_ = true;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b)
      if (t.add(a, b) == z) {
        (*neg)[a] = b;
        break;
      }
    if ((*neg)[a] == kNoElement) s.table_ring_ = false;
  }
  s.table_neg_ = std::move(neg);

  auto inv = std::make_shared<std::vector<std::uint32_t>>(n, kNoElement);
  bool all_invertible = true;
  for (std::uint32_t a = 0; a < n; ++a) {
    if (a == z) continue;
    for (std::uint32_t b = 0; b < n; ++b)
      if (t.mul(a, b) == o && t.mul(b, a) == o) {
        (*inv)[a] = b;
        break;
      }
    if ((*inv)[a] == kNoElement) all_invertible = false;
  }
  s.table_inv_ = std::move(inv);
  s.table_field_ = s.table_ring_ && s.table_commutative_ && all_invertible;
  return s;
}

const std::string& Semiring::name() const {
  static const std::string names[] = {"bool", "nat",      "int",
                                      "rat",  "tropical", "table"};
  return names[static_cast<int>(kind_)];
}

bool Semiring::is_finite() const {
  return kind_ == Kind::boolean || kind_ == Kind::table;
}

bool Semiring::is_field() const {
  switch (kind_) {
    case Kind::rationals:
      return true;
    case Kind::table:
      return table_field_;
    default:
      return false;
  }
}

bool Semiring::is_ring() const {
  switch (kind_) {
    case Kind::integers:
    case Kind::rationals:
      return true;
    case Kind::table:
      return table_ring_;
    default:
      return false;
  }
}

bool Semiring::is_commutative() const {
  return kind_ == Kind::table ? table_commutative_ : true;
}

Elem Semiring::zero() const {
  switch (kind_) {
    case Kind::boolean:
      return false;
    case Kind::naturals:
    case Kind::integers:
      return mpz_class(0);
    case Kind::rationals:
      return mpq_class(0);
    case Kind::tropical:
      return Tropical::infinity();
    case Kind::table:
      return TableRef{table_->zero_index()};
  }
  throw std::logic_error("bad kind");
}

Elem Semiring::one() const {
  switch (kind_) {
    case Kind::boolean:
      return true;
    case Kind::naturals:
    case Kind::integers:
      return mpz_class(1);
    case Kind::rationals:
      return mpq_class(1);
    case Kind::tropical:
      return Tropical::finite(0);
    case Kind::table:
      return TableRef{table_->one_index()};
  }
  throw std::logic_error("bad kind");
}

Elem Semiring::add(const Elem& a, const Elem& b) const {
  switch (kind_) {
    case Kind::boolean:
      return std::get<bool>(a) || std::get<bool>(b);
    case Kind::naturals:
    case Kind::integers:
      return mpz_class(std::get<mpz_class>(a) + std::get<mpz_class>(b));
    case Kind::rationals:
      return mpq_class(std::get<mpq_class>(a) + std::get<mpq_class>(b));
    case Kind::tropical: {
      const auto& x = std::get<Tropical>(a);
      const auto& y = std::get<Tropical>(b);
      if (x.is_inf()) return y;
      if (y.is_inf()) return x;
      return Tropical::finite(std::min(x.value(), y.value()));
    }
    case Kind::table:
      return TableRef{
          table_->add(std::get<TableRef>(a).index, std::get<TableRef>(b).index)};
  }
  throw std::logic_error("bad kind");
}

Elem Semiring::mul(const Elem& a, const Elem& b) const {
  switch (kind_) {
    case Kind::boolean:
      return std::get<bool>(a) && std::get<bool>(b);
    case Kind::naturals:
    case Kind::integers:
      return mpz_class(std::get<mpz_class>(a) * std::get<mpz_class>(b));
    case Kind::rationals:
      return mpq_class(std::get<mpq_class>(a) * std::get<mpq_class>(b));
    case Kind::tropical: {
      const auto& x = std::get<Tropical>(a);
      const auto& y = std::get<Tropical>(b);
      if (x.is_inf() || y.is_inf()) return Tropical::infinity();
      if (x.value() > std::numeric_limits<std::uint64_t>::max() - y.value())
        throw OverflowError("tropical product overflows 64 bits");
      return Tropical::finite(x.value() + y.value());
    }
    case Kind::table:
      return TableRef{
          table_->mul(std::get<TableRef>(a).index, std::get<TableRef>(b).index)};
  }
  throw std::logic_error("bad kind");
}

Elem Semiring::negate(const Elem& a) const {
  switch (kind_) {
    case Kind::integers:
      return mpz_class(-std::get<mpz_class>(a));
    case Kind::rationals:
      return mpq_class(-std::get<mpq_class>(a));
    case Kind::table: {
      if (!table_ring_)
        throw UnsupportedSemiringError("table semiring has no additive inverses");
      return TableRef{(*table_neg_)[std::get<TableRef>(a).index]};
    }
    default:
      throw UnsupportedSemiringError("negate requires a ring; '" + name() +
                                     "' is not one");
  }
}

Elem Semiring::invert(const Elem& a) const {
  switch (kind_) {
    case Kind::rationals: {
      const auto& q = std::get<mpq_class>(a);
      if (q == 0) throw std::domain_error("division by zero");
      return mpq_class(1 / q);
    }
    case Kind::table: {
      if (!table_field_)
        throw UnsupportedSemiringError("table semiring is not a field");
      const std::uint32_t i = std::get<TableRef>(a).index;
      if (i == table_->zero_index())
        throw std::domain_error("division by zero");
      return TableRef{(*table_inv_)[i]};
    }
    default:
      throw UnsupportedSemiringError("invert requires a field; '" + name() +
                                     "' is not one");
  }
}

bool Semiring::contains(const Elem& a) const {
  switch (kind_) {
    case Kind::boolean:
      return std::holds_alternative<bool>(a);
    case Kind::naturals:
      return std::holds_alternative<mpz_class>(a) &&
             std::get<mpz_class>(a) >= 0;
    case Kind::integers:
      return std::holds_alternative<mpz_class>(a);
    case Kind::rationals:
      return std::holds_alternative<mpq_class>(a);
    case Kind::tropical:
      return std::holds_alternative<Tropical>(a);
    case Kind::table:
      return std::holds_alternative<TableRef>(a) &&
             std::get<TableRef>(a).index < table_->size();
  }
  return false;
}

std::vector<Elem> Semiring::carrier() const {
  switch (kind_) {
    case Kind::boolean:
      return {Elem(false), Elem(true)};
    case Kind::table: {
      std::vector<Elem> out;
      out.reserve(table_->size());
      for (std::uint32_t i = 0; i < table_->size(); ++i)
        out.push_back(TableRef{i});
      return out;
    }
    default:
      throw UnsupportedSemiringError("carrier of infinite semiring '" +
                                     name() + "'");
  }
}

std::string Semiring::format(const Elem& a) const {
  switch (kind_) {
    case Kind::boolean:
      return std::get<bool>(a) ? "1" : "0";
    case Kind::naturals:
    case Kind::integers:
      return std::get<mpz_class>(a).get_str();
    case Kind::rationals: {
      const auto& q = std::get<mpq_class>(a);
      if (q.get_den() == 1) return q.get_num().get_str();
      return q.get_num().get_str() + "/" + q.get_den().get_str();
    }
    case Kind::tropical: {
      const auto& t = std::get<Tropical>(a);
      return t.is_inf() ? "inf" : std::to_string(t.value());
    }
    case Kind::table:
      return table_->label(std::get<TableRef>(a).index);
  }
  throw std::logic_error("bad kind");
}

Elem Semiring::parse(std::string_view token) const {
  const std::string t(token);
  switch (kind_) {
    case Kind::boolean:
      if (t == "0") return false;
      if (t == "1") return true;
      throw std::invalid_argument("expected 0 or 1, got '" + t + "'");
    case Kind::naturals:
      if (!valid_integer_token(t, false))
        throw std::invalid_argument("expected a natural number, got '" + t +
                                    "'");
      return mpz_class(t);
    case Kind::integers:
      if (!valid_integer_token(t, true))
        throw std::invalid_argument("expected an integer, got '" + t + "'");
      return mpz_class(t);
    case Kind::rationals: {
      const auto slash = t.find('/');
      const std::string num = t.substr(0, slash);
      if (!valid_integer_token(num, true))
        throw std::invalid_argument("expected a rational, got '" + t + "'");
      if (slash == std::string::npos) return mpq_class(mpz_class(num));
      const std::string den = t.substr(slash + 1);
      if (!valid_integer_token(den, true))
        throw std::invalid_argument("expected a rational, got '" + t + "'");
      const mpz_class den_z{den};
      if (den_z == 0)
        throw std::invalid_argument("zero denominator in '" + t + "'");
      mpq_class q{mpz_class{num}, den_z};
      q.canonicalize();
      return q;
    }
    case Kind::tropical: {
      if (t == "inf") return Tropical::infinity();
      if (!valid_integer_token(t, false))
        throw std::invalid_argument("expected a natural or 'inf', got '" + t +
                                    "'");
      static_assert(sizeof(unsigned long) >= 8);
      mpz_class v(t);
      if (!v.fits_ulong_p())
        throw std::invalid_argument("tropical value exceeds 64 bits: '" + t +
                                    "'");
      return Tropical::finite(v.get_ui());
    }
    case Kind::table: {
      const auto idx = table_->find(t);
      if (!idx)
        throw std::invalid_argument("unknown element label '" + t + "'");
      return TableRef{*idx};
    }
  }
  throw std::logic_error("bad kind");
}

bool operator==(const Semiring& a, const Semiring& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ != Semiring::Kind::table) return true;
  if (a.table_ == b.table_) return true;
  return a.table_->same_content(*b.table_);
}

}  // namespace wfa
