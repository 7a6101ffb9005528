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

#include "wfa/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace wfa {

namespace fs = std::filesystem;

namespace {

struct Token {
  std::string text;
  std::size_t line = 0;
  std::size_t col = 0;
};

/// Whitespace-split tokens with positions; `#` starts a comment to end of
/// line.
class TokenReader {
 public:
  TokenReader(std::istream& in, std::string display_name)
      : file_(std::move(display_name)) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() &&
               std::isspace(static_cast<unsigned char>(line[i])))
          ++i;
        const std::size_t start = i;
        while (i < line.size() &&
               !std::isspace(static_cast<unsigned char>(line[i])))
          ++i;
        if (i > start)
          tokens_.push_back(
              Token{line.substr(start, i - start), line_no, start + 1});
      }
      last_line_ = line_no;
    }
  }

  const std::string& file() const { return file_; }
  bool done() const { return pos_ == tokens_.size(); }

  const Token& peek() const {
    if (done()) fail_eof("unexpected end of file");
    return tokens_[pos_];
  }

  Token take() {
    if (done()) fail_eof("unexpected end of file");
    return tokens_[pos_++];
  }

  Token expect(const std::string& literal) {
    Token t = take();
    if (t.text != literal)
      throw ParseError(file_, t.line, t.col,
                       "expected '" + literal + "', got '" + t.text + "'");
    return t;
  }

  /// Remaining tokens on the given line.
  std::vector<Token> rest_of_line(std::size_t line) {
    std::vector<Token> out;
    while (!done() && tokens_[pos_].line == line) out.push_back(take());
    return out;
  }

  void expect_done() const {
    if (!done())
      throw ParseError(file_, peek().line, peek().col,
                       "unexpected trailing content '" + peek().text + "'");
  }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(file_, t.line, t.col, msg);
  }

  [[noreturn]] void fail_eof(const std::string& msg) const {
    throw ParseError(file_, last_line_ + 1, 1, msg);
  }

 private:
  std::string file_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t last_line_ = 0;
};

Elem parse_elem(TokenReader& r, const Semiring& s) {
  const Token t = r.take();
  try {
    return s.parse(t.text);
  } catch (const std::invalid_argument& e) {
    r.fail(t, e.what());
  }
}

Matrix parse_matrix(TokenReader& r, const Semiring& s, std::size_t rows,
                    std::size_t cols) {
  std::vector<Elem> entries;
  entries.reserve(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i)
    entries.push_back(parse_elem(r, s));
  return Matrix(s, rows, cols, std::move(entries));
}

std::size_t parse_count(TokenReader& r, const std::string& what,
                        std::size_t min_value, std::size_t max_value) {
  const Token t = r.take();
  try {
    std::size_t processed = 0;
    const unsigned long long v = std::stoull(t.text, &processed);
    if (processed != t.text.size() || v < min_value || v > max_value)
      throw std::exception();
    return static_cast<std::size_t>(v);
  } catch (...) {
    r.fail(t, "expected " + what + ", got '" + t.text + "'");
  }
}

std::ifstream open_input(const fs::path& file) {
  std::ifstream in(file);
  if (!in)
    throw ParseError(file.string(), 0, 0, "cannot open file");
  return in;
}

std::ofstream open_output(const fs::path& file) {
  std::ofstream out(file);
  if (!out)
    throw std::runtime_error("cannot write file '" + file.string() + "'");
  return out;
}

Semiring parse_semiring_header(TokenReader& r, const fs::path& base_dir) {
  r.expect("semiring:");
  const Token kind = r.take();
  if (kind.text == "bool") return Semiring::boolean();
  if (kind.text == "nat") return Semiring::naturals();
  if (kind.text == "int") return Semiring::integers();
  if (kind.text == "rat") return Semiring::rationals();
  if (kind.text == "tropical") return Semiring::tropical();
  if (kind.text == "table") {
    const Token path = r.take();
    const fs::path table_file = base_dir / fs::path(path.text);
    try {
      return Semiring::table(load_table_semiring(table_file));
    } catch (const InvalidTableError& e) {
      r.fail(path, std::string("referenced table is not a semiring: ") +
                       e.what());
    } catch (const ShapeError& e) {
      r.fail(path, std::string("referenced table is malformed: ") + e.what());
    }
  }
  r.fail(kind, "unknown semiring '" + kind.text +
                   "' (expected bool|nat|int|rat|tropical|table <path>)");
}

std::string semiring_ref_for(const Automaton& a, const fs::path& out_file) {
  const Semiring& s = a.semiring();
  if (s.kind() != Semiring::Kind::table) return s.name();
  fs::path table_file = s.table_data()->origin();
  if (table_file.empty()) {
    // Never loaded from disk: materialize the table next to the automaton.
    table_file = out_file;
    table_file += ".table";
    save_table_semiring(*s.table_data(), table_file);
  }
  return "table " +
         relative_ref(table_file, fs::absolute(out_file).parent_path());
}

}  // namespace

std::string relative_ref(const fs::path& target, const fs::path& from_dir) {
  std::error_code ec;
  const fs::path rel =
      fs::relative(fs::weakly_canonical(target, ec), from_dir, ec);
  if (ec || rel.empty()) return fs::absolute(target).generic_string();
  return rel.generic_string();
}

std::shared_ptr<const TableData> load_table_semiring(const fs::path& file) {
  std::ifstream in = open_input(file);
  TokenReader r(in, file.string());

  const Token header = r.expect("elements:");
  std::vector<std::string> labels;
  for (const Token& t : r.rest_of_line(header.line)) labels.push_back(t.text);
  if (labels.empty())
    r.fail(header, "at least one element label is required");
  const std::uint32_t size = static_cast<std::uint32_t>(labels.size());

  auto label_index = [&](const Token& t) -> std::uint32_t {
    for (std::uint32_t i = 0; i < size; ++i)
      if (labels[i] == t.text) return i;
    r.fail(t, "unknown element label '" + t.text + "'");
  };

  r.expect("zero:");
  const std::uint32_t zero = label_index(r.take());
  r.expect("one:");
  const std::uint32_t one = label_index(r.take());

  auto read_table = [&](const std::string& keyword) {
    r.expect(keyword);
    std::vector<std::uint32_t> table;
    table.reserve(static_cast<std::size_t>(size) * size);
    for (std::size_t i = 0; i < static_cast<std::size_t>(size) * size; ++i)
      table.push_back(label_index(r.take()));
    return table;
  };
  std::vector<std::uint32_t> add = read_table("add:");
  std::vector<std::uint32_t> mul = read_table("mul:");
  r.expect_done();

  std::shared_ptr<TableData> data;
  try {
    data = std::make_shared<TableData>(std::move(labels), std::move(add),
                                       std::move(mul), zero, one);
  } catch (const ShapeError& e) {
    r.fail(header, e.what());
  }
  std::error_code ec;
  const fs::path canon = fs::weakly_canonical(file, ec);
  data->set_origin(ec ? fs::absolute(file) : canon);
  return data;
}

void save_table_semiring(const TableData& t, const fs::path& file) {
  std::ofstream out = open_output(file);
  out << "elements:";
  for (std::uint32_t i = 0; i < t.size(); ++i) out << " " << t.label(i);
  out << "\nzero: " << t.label(t.zero_index());
  out << "\none: " << t.label(t.one_index());
  out << "\nadd:\n";
  for (std::uint32_t i = 0; i < t.size(); ++i) {
    for (std::uint32_t j = 0; j < t.size(); ++j)
      out << (j ? " " : "") << t.label(t.add(i, j));
    out << "\n";
  }
  out << "mul:\n";
  for (std::uint32_t i = 0; i < t.size(); ++i) {
    for (std::uint32_t j = 0; j < t.size(); ++j)
      out << (j ? " " : "") << t.label(t.mul(i, j));
    out << "\n";
  }
}

Automaton parse_automaton(std::istream& in, const std::string& display_name,
                          const fs::path& base_dir) {
  TokenReader r(in, display_name);
  const Semiring s = parse_semiring_header(r, base_dir);

  const Token alpha_kw = r.expect("alphabet:");
  std::string alphabet;
  for (const Token& t : r.rest_of_line(alpha_kw.line)) {
    if (t.text.size() != 1)
      r.fail(t, "alphabet letters must be single characters");
    if (alphabet.find(t.text[0]) != std::string::npos)
      r.fail(t, "duplicate alphabet letter '" + t.text + "'");
    alphabet.push_back(t.text[0]);
  }

  r.expect("dim:");
  const std::size_t n = parse_count(r, "a dimension in [1, 4096]", 1, 4096);

  r.expect("alpha:");
  Matrix initial = parse_matrix(r, s, 1, n);

  std::map<char, Matrix> transitions;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    r.expect("M");
    const Token letter = r.take();
    if (letter.text.size() != 2 || letter.text[1] != ':')
      r.fail(letter, "expected '<letter>:' after 'M'");
    const char c = letter.text[0];
    if (alphabet.find(c) == std::string::npos)
      r.fail(letter, std::string("letter '") + c + "' is not in the alphabet");
    if (transitions.count(c))
      r.fail(letter, std::string("duplicate matrix for letter '") + c + "'");
    transitions.emplace(c, parse_matrix(r, s, n, n));
  }

  r.expect("beta:");
  Matrix final_vector = parse_matrix(r, s, n, 1);
  r.expect_done();
  return Automaton(std::move(alphabet), std::move(initial),
                   std::move(transitions), std::move(final_vector));
}

Automaton load_automaton(const fs::path& file) {
  std::ifstream in = open_input(file);
  return parse_automaton(in, file.string(), fs::absolute(file).parent_path());
}

std::string format_automaton(const Automaton& a,
                             const std::string& semiring_ref) {
  const Semiring& s = a.semiring();
  std::ostringstream out;
  out << "semiring: " << semiring_ref << "\n";
  out << "alphabet:";
  for (char c : a.alphabet()) out << " " << c;
  out << "\ndim: " << a.dim() << "\n";
  out << "alpha:";
  for (std::size_t j = 0; j < a.dim(); ++j)
    out << " " << s.format(a.initial()(0, j));
  out << "\n";
  for (char c : a.alphabet()) {
    out << "M " << c << ":\n";
    const Matrix& m = a.transition(c);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t j = 0; j < a.dim(); ++j)
        out << (j ? " " : "") << s.format(m(i, j));
      out << "\n";
    }
  }
  out << "beta:";
  for (std::size_t i = 0; i < a.dim(); ++i)
    out << " " << s.format(a.final_vector()(i, 0));
  out << "\n";
  return out.str();
}

void save_automaton(const Automaton& a, const fs::path& file) {
  std::string ref = semiring_ref_for(a, file);
  std::ofstream out = open_output(file);
  out << format_automaton(a, ref);
}

SimulationCertificate load_certificate(const fs::path& file) {
  std::ifstream in = open_input(file);
  TokenReader r(in, file.string());
  const fs::path base = fs::absolute(file).parent_path();

  r.expect("source:");
  const Token source_tok = r.take();
  r.expect("target:");
  const Token target_tok = r.take();
  Automaton source = load_automaton(base / fs::path(source_tok.text));
  Automaton target = load_automaton(base / fs::path(target_tok.text));
  if (!(source.semiring() == target.semiring()))
    r.fail(source_tok, "source and target are over different semirings");
  r.expect("X:");
  Matrix x = parse_matrix(r, source.semiring(), source.dim(), target.dim());
  r.expect_done();
  return SimulationCertificate(std::move(source), std::move(target),
                               std::move(x));
}

Matrix load_certificate_matrix(const fs::path& file, const Semiring& s,
                               std::size_t m, std::size_t n) {
  std::ifstream in = open_input(file);
  TokenReader r(in, file.string());
  r.expect("source:");
  r.take();
  r.expect("target:");
  r.take();
  r.expect("X:");
  Matrix x = parse_matrix(r, s, m, n);
  r.expect_done();
  return x;
}

void save_certificate(const Matrix& x, const fs::path& file,
                      const std::string& source_ref,
                      const std::string& target_ref) {
  const Semiring& s = x.semiring();
  std::ofstream out = open_output(file);
  out << "source: " << source_ref << "\n";
  out << "target: " << target_ref << "\n";
  out << "X:\n";
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j)
      out << (j ? " " : "") << s.format(x(i, j));
    out << "\n";
  }
}

ChainCertificate load_chain(const fs::path& file) {
  std::ifstream in = open_input(file);
  TokenReader r(in, file.string());
  const fs::path base = fs::absolute(file).parent_path();

  ChainCertificate chain;
  while (!r.done() && r.peek().text == "automaton:") {
    r.take();
    const Token path = r.take();
    chain.automata.push_back(load_automaton(base / fs::path(path.text)));
    if (chain.automata.size() > 1) {
      if (!(chain.automata.back().semiring() ==
            chain.automata.front().semiring()))
        r.fail(path, "chain automata are over different semirings");
      if (chain.automata.back().alphabet() !=
          chain.automata.front().alphabet())
        r.fail(path, "chain automata have different alphabets");
    }
  }
  if (chain.automata.empty())
    r.fail_eof("chain file must list at least one automaton");

  while (!r.done()) {
    const Token kw = r.expect("link:");
    if (chain.links.size() + 1 >= chain.automata.size())
      r.fail(kw, "more links than automaton pairs");
    const Token dir_tok = r.take();
    Direction dir;
    if (dir_tok.text == "forward")
      dir = Direction::forward;
    else if (dir_tok.text == "backward")
      dir = Direction::backward;
    else
      r.fail(dir_tok, "expected 'forward' or 'backward'");
    const std::size_t i = chain.links.size();
    const std::size_t rows = dir == Direction::forward
                                 ? chain.automata[i].dim()
                                 : chain.automata[i + 1].dim();
    const std::size_t cols = dir == Direction::forward
                                 ? chain.automata[i + 1].dim()
                                 : chain.automata[i].dim();
    r.expect("X:");
    Matrix x =
        parse_matrix(r, chain.automata.front().semiring(), rows, cols);
    chain.links.push_back(ChainLink{dir, std::move(x)});
  }
  if (chain.links.size() + 1 != chain.automata.size())
    r.fail_eof("chain needs exactly one link per adjacent automaton pair");
  return chain;
}

void save_chain(const ChainCertificate& chain, const fs::path& file,
                const std::vector<std::string>& automaton_refs) {
  if (automaton_refs.size() != chain.automata.size())
    throw MismatchError("need one path reference per chain automaton");
  const Semiring& s = chain.automata.front().semiring();
  std::ofstream out = open_output(file);
  for (const std::string& ref : automaton_refs)
    out << "automaton: " << ref << "\n";
  for (const ChainLink& link : chain.links) {
    out << "link: "
        << (link.dir == Direction::forward ? "forward" : "backward") << "\n";
    out << "X:\n";
    for (std::size_t i = 0; i < link.x.rows(); ++i) {
      for (std::size_t j = 0; j < link.x.cols(); ++j)
        out << (j ? " " : "") << s.format(link.x(i, j));
      out << "\n";
    }
  }
}

}  // namespace wfa
