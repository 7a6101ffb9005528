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

#include "wfa/joint.hpp"

#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

namespace wfa {

namespace {

void check_joint_inputs(const Automaton& a, const Automaton& b) {
  if (!(a.semiring() == b.semiring()))
    throw MismatchError("joint construction across different semirings");
  if (a.alphabet() != b.alphabet())
    throw MismatchError("joint construction across different alphabets");
}

/// Re-derives the witness through behavior_coeff; a mismatch with the closure
/// state would be an implementation bug.
InequivalenceWitness make_witness(const Automaton& a, const Automaton& b,
                                  const Word& w) {
  InequivalenceWitness witness{w, behavior_coeff(a, w), behavior_coeff(b, w)};
  if (elem_eq(witness.lhs, witness.rhs))
    throw std::logic_error("internal: inequivalence witness does not recompute");
  return witness;
}

std::vector<Elem> concat_rows(const Matrix& l, const Matrix& r) {
  std::vector<Elem> out;
  out.reserve(l.cols() + r.cols());
  for (std::size_t j = 0; j < l.cols(); ++j) out.push_back(l(0, j));
  for (std::size_t j = 0; j < r.cols(); ++j) out.push_back(r(0, j));
  return out;
}

/// Shared closure bookkeeping: one generator pair with the word that
/// produced it.
struct Gen {
  Matrix left;
  Matrix right;
  Word word;
};

GeneratorSet pack_generators(const Semiring& s, const std::vector<Gen>& gens,
                             std::size_t m, std::size_t n) {
  GeneratorSet out{std::vector<Word>{}, Matrix(s, gens.size(), m),
                   Matrix(s, gens.size(), n)};
  for (std::size_t i = 0; i < gens.size(); ++i) {
    out.words.push_back(gens[i].word);
    for (std::size_t j = 0; j < m; ++j) out.left(i, j) = gens[i].left(0, j);
    for (std::size_t j = 0; j < n; ++j) out.right(i, j) = gens[i].right(0, j);
  }
  return out;
}

std::size_t max_word_length(const std::vector<Gen>& gens) {
  std::size_t depth = 0;
  for (const Gen& g : gens) depth = std::max(depth, g.word.size());
  return depth;
}

/// Re-checks the constructed result against its contract before handing it
/// out: both simulations, and the shared final vector.
JointResult finalize(JointResult j, const Automaton& a, const Automaton& b) {
  if (!check_simulation(j.joint, a, j.x).ok)
    throw std::logic_error("internal: joint X is not a simulation onto A");
  if (!check_simulation(j.joint, b, j.y).ok)
    throw std::logic_error("internal: joint Y is not a simulation onto B");
  if (!(j.x * a.final_vector() == j.joint.final_vector()) ||
      !(j.y * b.final_vector() == j.joint.final_vector()))
    throw std::logic_error("internal: joint final vector mismatch");
  return j;
}

/// The all-zero seed (both initial vectors zero): both behaviors are the zero
/// series, and the one-state zero automaton with zero matrices simulates into
/// both.
JointResult degenerate_zero_joint(const Automaton& a, const Automaton& b,
                                  JointMode mode) {
  const Semiring& s = a.semiring();
  std::map<char, Matrix> trans;
  for (char letter : a.alphabet()) trans.emplace(letter, Matrix(s, 1, 1));
  Automaton joint(a.alphabet(), Matrix(s, 1, 1), std::move(trans),
                  Matrix(s, 1, 1));
  GeneratorSet gens{std::vector<Word>{}, Matrix(s, 0, a.dim()),
                    Matrix(s, 0, b.dim())};
  return finalize(JointResult{std::move(joint), Matrix(s, 1, a.dim()),
                              Matrix(s, 1, b.dim()), std::move(gens), mode, 0},
                  a, b);
}

/// Solves Σ_i coeff_i · gens[i] = target over a field by exact Gaussian
/// elimination (first-nonzero-column pivoting, no scaling heuristics).
/// Returns nullopt when target lies outside the span.
std::optional<std::vector<Elem>> field_combination(
    const Semiring& s, const std::vector<std::vector<Elem>>& gens,
    const std::vector<Elem>& target) {
  const std::size_t p = gens.size();
  const std::size_t q = target.size();
  if (p == 0) {
    for (const Elem& e : target)
      if (!s.is_zero(e)) return std::nullopt;
    return std::vector<Elem>{};
  }
  // Augmented system A·coeff = target with A[r][i] = gens[i][r].
  std::vector<std::vector<Elem>> aug(q, std::vector<Elem>(p + 1, s.zero()));
  for (std::size_t r = 0; r < q; ++r) {
    for (std::size_t i = 0; i < p; ++i) aug[r][i] = gens[i][r];
    aug[r][p] = target[r];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < p && rank < q; ++col) {
    std::size_t pr = rank;
    while (pr < q && s.is_zero(aug[pr][col])) ++pr;
    if (pr == q) continue;
    std::swap(aug[rank], aug[pr]);
    const Elem inv = s.invert(aug[rank][col]);
    for (std::size_t j = col; j <= p; ++j)
      aug[rank][j] = s.mul(inv, aug[rank][j]);
    for (std::size_t r2 = 0; r2 < q; ++r2) {
      if (r2 == rank || s.is_zero(aug[r2][col])) continue;
      const Elem f = aug[r2][col];
      for (std::size_t j = col; j <= p; ++j)
        aug[r2][j] = s.sub(aug[r2][j], s.mul(f, aug[rank][j]));
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < q; ++r)
    if (!s.is_zero(aug[r][p])) return std::nullopt;
  std::vector<Elem> coeffs(p, s.zero());
  for (std::size_t r = 0; r < rank; ++r) coeffs[pivot_cols[r]] = aug[r][p];
  return coeffs;
}

// ---------------------------------------------------------------------------
// Integer lattices in Hermite normal form.

std::vector<mpz_class> to_mpz_row(const Matrix& row) {
  std::vector<mpz_class> out;
  out.reserve(row.cols());
  for (std::size_t j = 0; j < row.cols(); ++j)
    out.push_back(std::get<mpz_class>(row(0, j)));
  return out;
}

/// Row-style HNF basis of a ℤ-submodule of ℤ^width, together with the
/// transformation expressing each basis row as an integer combination of the
/// inserted generator rows (h_i = Σ_j t_i[j] · gen_j).
class IntegerLattice {
 public:
  explicit IntegerLattice(std::size_t width) : width_(width) {}

  std::size_t generator_count() const { return gen_count_; }

  void insert(const std::vector<mpz_class>& v) {
    for (auto& t : t_) t.emplace_back(0);
    std::vector<mpz_class> w = v;
    std::vector<mpz_class> tw(gen_count_ + 1, 0);
    tw[gen_count_] = 1;
    ++gen_count_;
    reduce_in(std::move(w), std::move(tw));
    normalize();
  }

  bool contains(const std::vector<mpz_class>& v) const {
    return static_cast<bool>(express_over_basis(v));
  }

  /// Coefficients over the inserted generators (via the recorded
  /// transformation), or nullopt when v is outside the module.
  std::optional<std::vector<mpz_class>> express_over_generators(
      const std::vector<mpz_class>& v) const {
    auto y = express_over_basis(v);
    if (!y) return std::nullopt;
    std::vector<mpz_class> out(gen_count_, 0);
    for (std::size_t k = 0; k < h_.size(); ++k)
      for (std::size_t j = 0; j < gen_count_; ++j) out[j] += (*y)[k] * t_[k][j];
    return out;
  }

 private:
  static std::size_t first_nonzero(const std::vector<mpz_class>& v) {
    std::size_t i = 0;
    while (i < v.size() && v[i] == 0) ++i;
    return i;
  }

  std::optional<std::vector<mpz_class>> express_over_basis(
      std::vector<mpz_class> w) const {
    std::vector<mpz_class> y(h_.size(), 0);
    for (std::size_t k = 0; k < h_.size(); ++k) {
      const std::size_t c = pivot_[k];
      if (first_nonzero(w) < c) return std::nullopt;
      if (w[c] == 0) continue;
      if (!mpz_divisible_p(w[c].get_mpz_t(), h_[k][c].get_mpz_t()))
        return std::nullopt;
      mpz_class q;
      mpz_divexact(q.get_mpz_t(), w[c].get_mpz_t(), h_[k][c].get_mpz_t());
      for (std::size_t j = c; j < width_; ++j) w[j] -= q * h_[k][j];
      y[k] = std::move(q);
    }
    if (first_nonzero(w) != width_) return std::nullopt;
    return y;
  }

  void reduce_in(std::vector<mpz_class> w, std::vector<mpz_class> tw) {
    while (true) {
      const std::size_t pos = first_nonzero(w);
      if (pos == width_) return;  // dependent on current basis
      std::size_t k = 0;
      while (k < h_.size() && pivot_[k] < pos) ++k;
      if (k == h_.size() || pivot_[k] > pos) {
        h_.insert(h_.begin() + static_cast<std::ptrdiff_t>(k), std::move(w));
        t_.insert(t_.begin() + static_cast<std::ptrdiff_t>(k), std::move(tw));
        pivot_.insert(pivot_.begin() + static_cast<std::ptrdiff_t>(k), pos);
        return;
      }
      // Same pivot column: fold w into row k with an extended gcd step.
      mpz_class g, sa, sb;
      mpz_gcdext(g.get_mpz_t(), sa.get_mpz_t(), sb.get_mpz_t(),
                 h_[k][pos].get_mpz_t(), w[pos].get_mpz_t());
      const mpz_class u1 = h_[k][pos] / g;
      const mpz_class u2 = w[pos] / g;
      std::vector<mpz_class> new_h(width_), new_t(gen_count_);
      for (std::size_t j = 0; j < width_; ++j) {
        new_h[j] = sa * h_[k][j] + sb * w[j];
        w[j] = u1 * w[j] - u2 * h_[k][j];
      }
      for (std::size_t j = 0; j < gen_count_; ++j) {
        new_t[j] = sa * t_[k][j] + sb * tw[j];
        tw[j] = u1 * tw[j] - u2 * t_[k][j];
      }
      h_[k] = std::move(new_h);
      t_[k] = std::move(new_t);
    }
  }

  /// Pivots positive, entries above each pivot reduced into [0, pivot).
  void normalize() {
    for (std::size_t k = 0; k < h_.size(); ++k) {
      if (h_[k][pivot_[k]] < 0) {
        for (auto& e : h_[k]) e = -e;
        for (auto& e : t_[k]) e = -e;
      }
    }
    for (std::size_t k = 0; k < h_.size(); ++k) {
      for (std::size_t above = 0; above < k; ++above) {
        const std::size_t c = pivot_[k];
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), h_[above][c].get_mpz_t(),
                   h_[k][c].get_mpz_t());
        if (q == 0) continue;
        for (std::size_t j = 0; j < width_; ++j) h_[above][j] -= q * h_[k][j];
        for (std::size_t j = 0; j < gen_count_; ++j)
          t_[above][j] -= q * t_[k][j];
      }
    }
  }

  std::size_t width_;
  std::size_t gen_count_ = 0;
  std::vector<std::vector<mpz_class>> h_;
  std::vector<std::vector<mpz_class>> t_;
  std::vector<std::size_t> pivot_;
};

}  // namespace

std::string to_string(JointMode m) {
  switch (m) {
    case JointMode::finite:
      return "finite";
    case JointMode::field:
      return "field";
    case JointMode::integer:
      return "integer";
  }
  return "?";
}

JointOutcome joint_finite(const Automaton& a, const Automaton& b) {
  check_joint_inputs(a, b);
  const Semiring& s = a.semiring();
  if (!s.is_finite())
    throw UnsupportedSemiringError(
        "joint_finite over '" + s.name() +
        "': mode table is finite->set closure, field->span closure, "
        "int->lattice closure");
  const std::size_t m = a.dim();
  const std::size_t n = b.dim();

  std::vector<Gen> gens;
  std::vector<std::vector<std::size_t>> successor;  // per gen, per letter
  std::map<std::vector<Elem>, std::size_t> index;
  std::deque<std::size_t> queue;

  // Appends a newly reached pair, first checking that its two final products
  // agree; a mismatch is an inequivalence witnessed by the producing word.
  auto append = [&](Matrix l, Matrix r,
                    Word w) -> std::optional<InequivalenceWitness> {
    if (!elem_eq(dot(l, a.final_vector()), dot(r, b.final_vector())))
      return make_witness(a, b, w);
    index.emplace(concat_rows(l, r), gens.size());
    queue.push_back(gens.size());
    gens.push_back(Gen{std::move(l), std::move(r), std::move(w)});
    successor.emplace_back(a.alphabet().size(), 0);
    return std::nullopt;
  };

  if (auto w = append(a.initial(), b.initial(), Word{})) return *w;

  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t li = 0; li < a.alphabet().size(); ++li) {
      const char letter = a.alphabet()[li];
      Matrix l = gens[i].left * a.transition(letter);
      Matrix r = gens[i].right * b.transition(letter);
      const auto key = concat_rows(l, r);
      auto it = index.find(key);
      if (it == index.end()) {
        const std::size_t j = gens.size();
        if (auto w =
                append(std::move(l), std::move(r), gens[i].word + letter))
          return *w;
        successor[i][li] = j;
      } else {
        successor[i][li] = it->second;
      }
    }
  }

  const std::size_t p = gens.size();
  Matrix kappa(s, 1, p);
  kappa(0, 0) = s.one();
  Matrix lambda(s, p, 1);
  for (std::size_t i = 0; i < p; ++i)
    lambda(i, 0) = dot(gens[i].left, a.final_vector());
  std::map<char, Matrix> trans;
  for (std::size_t li = 0; li < a.alphabet().size(); ++li) {
    Matrix r(s, p, p);
    for (std::size_t i = 0; i < p; ++i) r(i, successor[i][li]) = s.one();
    trans.emplace(a.alphabet()[li], std::move(r));
  }

  GeneratorSet gset = pack_generators(s, gens, m, n);
  const std::size_t depth = max_word_length(gens);
  Automaton joint(a.alphabet(), std::move(kappa), std::move(trans),
                  std::move(lambda));
  return finalize(JointResult{std::move(joint), gset.left, gset.right,
                              std::move(gset), JointMode::finite, depth},
                  a, b);
}

JointOutcome joint_field(const Automaton& a, const Automaton& b) {
  check_joint_inputs(a, b);
  const Semiring& s = a.semiring();
  if (!s.is_field())
    throw UnsupportedSemiringError(
        "joint_field over '" + s.name() +
        "': mode table is finite->set closure, field->span closure, "
        "int->lattice closure");
  const std::size_t m = a.dim();
  const std::size_t n = b.dim();

  std::vector<Gen> gens;
  std::vector<std::vector<Elem>> gen_rows;
  std::deque<std::size_t> queue;

  auto append = [&](Matrix l, Matrix r, Word w,
                    std::vector<Elem> key) -> std::optional<InequivalenceWitness> {
    if (!elem_eq(dot(l, a.final_vector()), dot(r, b.final_vector())))
      return make_witness(a, b, w);
    queue.push_back(gens.size());
    gens.push_back(Gen{std::move(l), std::move(r), std::move(w)});
    gen_rows.push_back(std::move(key));
    return std::nullopt;
  };

  {
    std::vector<Elem> seed = concat_rows(a.initial(), b.initial());
    bool all_zero = true;
    for (const Elem& e : seed)
      if (!s.is_zero(e)) {
        all_zero = false;
        break;
      }
    if (all_zero) return degenerate_zero_joint(a, b, JointMode::field);
    if (auto w = append(a.initial(), b.initial(), Word{}, std::move(seed)))
      return *w;
  }

  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (char letter : a.alphabet()) {
      Matrix l = gens[i].left * a.transition(letter);
      Matrix r = gens[i].right * b.transition(letter);
      std::vector<Elem> key = concat_rows(l, r);
      if (field_combination(s, gen_rows, key)) continue;  // already spanned
      if (auto w = append(std::move(l), std::move(r), gens[i].word + letter,
                          std::move(key)))
        return *w;
    }
  }

  const std::size_t p = gens.size();
  std::map<char, Matrix> trans;
  for (char letter : a.alphabet()) {
    Matrix r(s, p, p);
    for (std::size_t i = 0; i < p; ++i) {
      const std::vector<Elem> succ = concat_rows(
          gens[i].left * a.transition(letter),
          gens[i].right * b.transition(letter));
      auto coeffs = field_combination(s, gen_rows, succ);
      if (!coeffs)
        throw std::logic_error("internal: closed successor left the span");
      for (std::size_t j = 0; j < p; ++j) r(i, j) = (*coeffs)[j];
    }
    trans.emplace(letter, std::move(r));
  }
  auto kappa_coeffs = field_combination(
      s, gen_rows, concat_rows(a.initial(), b.initial()));
  if (!kappa_coeffs)
    throw std::logic_error("internal: seed pair left the span");
  Matrix kappa(s, 1, p);
  for (std::size_t j = 0; j < p; ++j) kappa(0, j) = (*kappa_coeffs)[j];
  Matrix lambda(s, p, 1);
  for (std::size_t i = 0; i < p; ++i)
    lambda(i, 0) = dot(gens[i].left, a.final_vector());

  GeneratorSet gset = pack_generators(s, gens, m, n);
  const std::size_t depth = max_word_length(gens);
  Automaton joint(a.alphabet(), std::move(kappa), std::move(trans),
                  std::move(lambda));
  return finalize(JointResult{std::move(joint), gset.left, gset.right,
                              std::move(gset), JointMode::field, depth},
                  a, b);
}

JointIntegerOutcome joint_integers(const Automaton& a, const Automaton& b,
                                   std::size_t cap) {
  check_joint_inputs(a, b);
  const Semiring& s = a.semiring();
  if (s.kind() != Semiring::Kind::integers)
    throw UnsupportedSemiringError(
        "joint_integers over '" + s.name() +
        "': mode table is finite->set closure, field->span closure, "
        "int->lattice closure");
  if (cap < 1) throw MismatchError("integer cap must be at least 1");
  const std::size_t m = a.dim();
  const std::size_t n = b.dim();

  std::vector<Gen> gens;
  IntegerLattice lattice(m + n);
  std::deque<std::size_t> queue;

  auto key_of = [&](const Matrix& l, const Matrix& r) {
    std::vector<mpz_class> key = to_mpz_row(l);
    const std::vector<mpz_class> right = to_mpz_row(r);
    key.insert(key.end(), right.begin(), right.end());
    return key;
  };

  auto append = [&](Matrix l, Matrix r, Word w,
                    std::vector<mpz_class> key)
      -> std::optional<InequivalenceWitness> {
    if (!elem_eq(dot(l, a.final_vector()), dot(r, b.final_vector())))
      return make_witness(a, b, w);
    lattice.insert(key);
    queue.push_back(gens.size());
    gens.push_back(Gen{std::move(l), std::move(r), std::move(w)});
    return std::nullopt;
  };

  {
    std::vector<mpz_class> seed = key_of(a.initial(), b.initial());
    bool all_zero = true;
    for (const mpz_class& v : seed)
      if (v != 0) {
        all_zero = false;
        break;
      }
    if (all_zero) return degenerate_zero_joint(a, b, JointMode::integer);
    if (auto w = append(a.initial(), b.initial(), Word{}, std::move(seed)))
      return *w;
  }

  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (char letter : a.alphabet()) {
      Matrix l = gens[i].left * a.transition(letter);
      Matrix r = gens[i].right * b.transition(letter);
      std::vector<mpz_class> key = key_of(l, r);
      if (lattice.contains(key)) continue;
      if (gens[i].word.size() + 1 > cap)
        return CapExhausted{cap, gens.size()};
      if (auto w = append(std::move(l), std::move(r), gens[i].word + letter,
                          std::move(key)))
        return *w;
    }
  }

  const std::size_t p = gens.size();
  std::map<char, Matrix> trans;
  for (char letter : a.alphabet()) {
    Matrix r(s, p, p);
    for (std::size_t i = 0; i < p; ++i) {
      auto coeffs = lattice.express_over_generators(key_of(
          gens[i].left * a.transition(letter),
          gens[i].right * b.transition(letter)));
      if (!coeffs)
        throw std::logic_error("internal: closed successor left the module");
      for (std::size_t j = 0; j < p; ++j) r(i, j) = (*coeffs)[j];
    }
    trans.emplace(letter, std::move(r));
  }
  auto kappa_coeffs =
      lattice.express_over_generators(key_of(a.initial(), b.initial()));
  if (!kappa_coeffs)
    throw std::logic_error("internal: seed pair left the module");
  Matrix kappa(s, 1, p);
  for (std::size_t j = 0; j < p; ++j) kappa(0, j) = (*kappa_coeffs)[j];
  Matrix lambda(s, p, 1);
  for (std::size_t i = 0; i < p; ++i)
    lambda(i, 0) = dot(gens[i].left, a.final_vector());

  GeneratorSet gset = pack_generators(s, gens, m, n);
  const std::size_t depth = max_word_length(gens);
  Automaton joint(a.alphabet(), std::move(kappa), std::move(trans),
                  std::move(lambda));
  return finalize(JointResult{std::move(joint), gset.left, gset.right,
                              std::move(gset), JointMode::integer, depth},
                  a, b);
}

ChainCertificate emit_chain(const JointResult& j, const Automaton& a,
                            const Automaton& b) {
  ChainCertificate chain;
  chain.automata = {a, j.joint, b};
  chain.links = {ChainLink{Direction::backward, j.x},
                 ChainLink{Direction::forward, j.y}};
  return chain;
}

}  // namespace wfa
