#include "qsolv/strat/algebra_file.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "qsolv/errors.hpp"

namespace qsolv::strat {

using intlat::Int;
using intlat::IntMatrix;
using intlat::IntVector;
using scalar::QLaurent;

struct Expr {
  enum class Kind { Integer, Q, Generator, Name, Add, Sub, Neg, Mul, Pow };
  Kind kind = Kind::Integer;
  std::int64_t value = 0;
  std::string name;
  std::vector<ExprPtr> args;
};

namespace {

ExprPtr make(Expr::Kind k, std::vector<ExprPtr> args = {}, std::int64_t value = 0, std::string name = {}) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->args = std::move(args);
  e->value = value;
  e->name = std::move(name);
  return e;
}

class ExprParser {
 public:
  explicit ExprParser(const std::string& s) : s_(s) {}

  ExprPtr parse() {
    ExprPtr e = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("expression '" + s_ + "' column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::int64_t integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (ec != std::errc()) fail("integer out of range");
    return v;
  }

  ExprPtr sum() {
    ExprPtr acc;
    if (accept('-')) {
      acc = make(Expr::Kind::Neg, {product()});
    } else {
      accept('+');
      acc = product();
    }
    while (true) {
      if (accept('+')) {
        acc = make(Expr::Kind::Add, {acc, product()});
      } else if (accept('-')) {
        acc = make(Expr::Kind::Sub, {acc, product()});
      } else {
        return acc;
      }
    }
  }

  ExprPtr product() {
    ExprPtr acc = power();
    while (accept('*')) acc = make(Expr::Kind::Mul, {acc, power()});
    return acc;
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (!accept('^')) return base;
    const bool negative = accept('-');
    const std::int64_t e = integer();
    return make(Expr::Kind::Pow, {base}, negative ? -e : e);
  }

  ExprPtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = sum();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return make(Expr::Kind::Integer, {}, integer());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string word = s_.substr(start, pos_ - start);
      if (word == "q") return make(Expr::Kind::Q);
      if (word.size() > 1 && word[0] == 'x' &&
          word.find_first_not_of("0123456789", 1) == std::string::npos) {
        std::int64_t k = 0;
        std::from_chars(word.data() + 1, word.data() + word.size(), k);
        if (k < 1) fail("generators are numbered from x1");
        return make(Expr::Kind::Generator, {}, k - 1);
      }
      return make(Expr::Kind::Name, {}, 0, word);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expression(const std::string& text) { return ExprParser(text).parse(); }

NcPoly evaluate(const Expr& e, const core::Algebra& alg, const std::map<std::string, NcPoly>& names) {
  const std::size_t dim = alg.dimension();
  switch (e.kind) {
    case Expr::Kind::Integer:
      return alg.constant(QLaurent(static_cast<long>(e.value)));
    case Expr::Kind::Q:
      return alg.constant(QLaurent::q());
    case Expr::Kind::Generator:
      if (static_cast<std::size_t>(e.value) >= dim) {
        throw ParseError("generator x" + std::to_string(e.value + 1) + " does not exist");
      }
      return alg.generator(static_cast<std::size_t>(e.value));
    case Expr::Kind::Name: {
      auto it = names.find(e.name);
      if (it == names.end()) throw ParseError("unknown name '" + e.name + "'");
      return it->second;
    }
    case Expr::Kind::Add:
      return evaluate(*e.args[0], alg, names) + evaluate(*e.args[1], alg, names);
    case Expr::Kind::Sub:
      return evaluate(*e.args[0], alg, names) - evaluate(*e.args[1], alg, names);
    case Expr::Kind::Neg:
      return -evaluate(*e.args[0], alg, names);
    case Expr::Kind::Mul: {
      const NcPoly a = evaluate(*e.args[0], alg, names);
      const NcPoly b = evaluate(*e.args[1], alg, names);
      return alg.multiply(a, b);
    }
    case Expr::Kind::Pow: {
      const Expr& base = *e.args[0];
      if (base.kind == Expr::Kind::Q) return alg.constant(QLaurent::monomial(e.value));
      if (base.kind == Expr::Kind::Generator && e.value < 0) {
        const auto i = static_cast<std::size_t>(base.value);
        if (i >= dim || !alg.is_invertible(i)) {
          throw ParseError("negative power of non-invertible generator x" + std::to_string(base.value + 1));
        }
        return alg.generator(i, e.value);
      }
      if (e.value < 0) throw ParseError("negative powers are allowed only on q and invertible generators");
      return alg.power(evaluate(base, alg, names), e.value);
    }
  }
  throw ParseError("corrupt expression");
}

NcPoly parse_element(const std::string& text, const core::Algebra& alg,
                     const std::map<std::string, NcPoly>& names) {
  return evaluate(*parse_expression(text), alg, names);
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int bracket_balance(const std::string& s) {
  int d = 0;
  for (char c : s) {
    if (c == '[') ++d;
    if (c == ']') --d;
  }
  return d;
}

/// Splits on commas outside parentheses and brackets.
std::vector<std::string> split_top(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

struct LineError {
  std::size_t line;
  [[noreturn]] void operator()(const std::string& msg) const {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
  }
};

std::string strip_brackets(const std::string& v, const LineError& fail) {
  const std::string t = trim(v);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') fail("expected a bracketed list, got '" + t + "'");
  return t.substr(1, t.size() - 2);
}

Int parse_int(const std::string& v, const LineError& fail) {
  const std::string t = trim(v);
  Int x = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
  if (t.empty() || ec != std::errc() || p != t.data() + t.size()) fail("expected an integer, got '" + t + "'");
  return x;
}

IntVector parse_int_list(const std::string& v, const LineError& fail) {
  IntVector out;
  for (const auto& item : split_top(strip_brackets(v, fail))) out.push_back(parse_int(item, fail));
  return out;
}

std::vector<std::string> parse_name_list(const std::string& v, const LineError& fail) {
  std::vector<std::string> out;
  for (const auto& item : split_top(strip_brackets(v, fail))) {
    if (item.empty()) fail("empty list entry");
    parse_expression(item);
    out.push_back(item);
  }
  return out;
}

std::vector<IntVector> parse_matrix(const std::string& v, const LineError& fail) {
  std::vector<IntVector> rows;
  for (const auto& item : split_top(strip_brackets(v, fail))) {
    if (item.empty()) fail("empty matrix row");
    rows.push_back(parse_int_list(item, fail));
  }
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k].size() != rows[0].size()) {
      fail("malformed matrix row " + std::to_string(k + 1) + ": expected " + std::to_string(rows[0].size()) +
           " entries, got " + std::to_string(rows[k].size()));
    }
  }
  return rows;
}

IntMatrix square_matrix(const std::vector<IntVector>& rows, std::size_t dim, const char* what,
                        const LineError& fail) {
  if (rows.size() != dim || (dim > 0 && rows[0].size() != dim)) {
    fail(std::string(what) + " must be " + std::to_string(dim) + "x" + std::to_string(dim));
  }
  return IntMatrix::from_rows(rows, dim);
}

struct PendingRelation {
  std::size_t line = 0;
  Int i = 0;
  Int j = 0;
  std::string r;
  bool has_i = false;
  bool has_j = false;
};

}  // namespace

AlgebraFile parse_algebra_file(const std::string& text) {
  enum class Section { None, Algebra, Weights, Relation, Stratum };
  AlgebraFile out;
  auto& spec = out.spec;
  spec.name = "algebra";
  std::vector<PendingRelation> relations;
  std::optional<std::vector<IntVector>> s_rows;
  std::optional<std::vector<IntVector>> w_rows;
  std::size_t s_line = 0;
  std::size_t w_line = 0;
  bool has_n = false;
  bool has_skew = false;
  std::set<std::string> seen;

  Section section = Section::None;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const LineError fail{lineno};
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line == "[algebra]" || line == "[weights]" || line == "[[relation]]" || line == "[[stratum]]") {
      if (line == "[algebra]") section = Section::Algebra;
      if (line == "[weights]") section = Section::Weights;
      if (line == "[[relation]]") {
        section = Section::Relation;
        relations.push_back({});
        relations.back().line = lineno;
      }
      if (line == "[[stratum]]") {
        section = Section::Stratum;
        out.strata.push_back({});
        out.strata.back().name = "stratum" + std::to_string(out.strata.size());
      }
      if ((section == Section::Algebra || section == Section::Weights) && !seen.insert(line).second) {
        fail("duplicate section " + line);
      }
      continue;
    }
    if (line.front() == '[') fail("unknown section " + line);
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    const std::size_t start_line = lineno;
    while (bracket_balance(value) > 0 && std::getline(in, raw)) {
      ++lineno;
      value += " " + trim(raw.substr(0, raw.find('#')));
    }
    if (bracket_balance(value) != 0) LineError{start_line}("unbalanced brackets");
    const LineError vfail{start_line};

    switch (section) {
      case Section::None:
        vfail("key '" + key + "' outside any section");
      case Section::Algebra:
        if (key == "name") {
          spec.name = value.size() >= 2 && value.front() == '"' && value.back() == '"'
                          ? value.substr(1, value.size() - 2)
                          : value;
        } else if (key == "n") {
          const Int n = parse_int(value, vfail);
          if (n < 0) vfail("n must be non-negative");
          spec.n = static_cast<std::size_t>(n);
          has_n = true;
        } else if (key == "m") {
          const Int m = parse_int(value, vfail);
          if (m < 0) vfail("m must be non-negative");
          spec.m = static_cast<std::size_t>(m);
        } else if (key == "S") {
          s_rows = parse_matrix(value, vfail);
          s_line = start_line;
        } else if (key == "skew_constants") {
          spec.skew_constants = parse_int_list(value, vfail);
          has_skew = true;
        } else {
          vfail("unknown key '" + key + "' in [algebra]");
        }
        break;
      case Section::Weights:
        if (key != "W") vfail("unknown key '" + key + "' in [weights]");
        w_rows = parse_matrix(value, vfail);
        w_line = start_line;
        break;
      case Section::Relation: {
        auto& rel = relations.back();
        if (key == "i") {
          rel.i = parse_int(value, vfail);
          rel.has_i = true;
        } else if (key == "j") {
          rel.j = parse_int(value, vfail);
          rel.has_j = true;
        } else if (key == "r") {
          parse_expression(value);
          rel.r = value;
        } else {
          vfail("unknown key '" + key + "' in [[relation]]");
        }
        break;
      }
      case Section::Stratum: {
        auto& st = out.strata.back();
        if (key == "name") {
          st.name = value;
        } else if (key == "vanish") {
          st.vanish = parse_name_list(value, vfail);
        } else if (key == "invert") {
          st.invert = parse_name_list(value, vfail);
        } else if (key == "derive") {
          const auto colon = value.find(':');
          if (colon == std::string::npos) vfail("expected 'derive = name : expression'");
          const std::string name = trim(value.substr(0, colon));
          const std::string expr = trim(value.substr(colon + 1));
          ExprPtr head = parse_expression(name);
          if (head->kind != Expr::Kind::Name) vfail("derived name '" + name + "' clashes with q or a generator");
          parse_expression(expr);
          st.derived.emplace_back(name, expr);
        } else {
          vfail("unknown key '" + key + "' in [[stratum]]");
        }
        break;
      }
    }
  }

  if (!has_n) throw ParseError("[algebra] n is required");
  if (!s_rows) throw ParseError("[algebra] S is required");
  const std::size_t dim = spec.n + spec.m;
  spec.S = square_matrix(*s_rows, dim, "S", LineError{s_line});
  if (w_rows) spec.W = square_matrix(*w_rows, dim, "W", LineError{w_line});
  if (!has_skew) spec.skew_constants.assign(spec.n, 0);

  std::map<std::pair<std::size_t, std::size_t>, std::string> texts;
  for (const auto& rel : relations) {
    const LineError fail{rel.line};
    if (!rel.has_i || !rel.has_j || rel.r.empty()) fail("[[relation]] needs i, j and r");
    if (rel.i < 1 || rel.j < 1) fail("relation indices are numbered from 1");
    const auto key = std::make_pair(static_cast<std::size_t>(rel.i - 1), static_cast<std::size_t>(rel.j - 1));
    if (!texts.emplace(key, rel.r).second) fail("duplicate relation for the pair (" + std::to_string(rel.i) + ", " +
                                                std::to_string(rel.j) + ")");
  }

  // r_ij lies in the subalgebra on x_{i+1}.., so the relations with larger i
  // are enough to normal-order it.
  for (std::size_t i = spec.n; i-- > 0;) {
    std::map<std::pair<std::size_t, std::size_t>, NcPoly> found;
    std::optional<orealg::OreAlgebra> partial;
    for (const auto& [key, r] : texts) {
      if (key.first != i) continue;
      if (!partial) partial.emplace(spec);
      found[key] = parse_element(r, *partial);
    }
    for (auto& [key, r] : found) spec.relations[key] = std::move(r);
  }
  for (const auto& [key, r] : texts) {
    if (key.first >= spec.n) {
      throw InvalidSpec("relation (" + std::to_string(key.first + 1) + ", " + std::to_string(key.second + 1) +
                        ") does not involve a skew generator first");
    }
  }
  orealg::OreAlgebra check(spec);
  return out;
}

AlgebraFile load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_algebra_file(os.str());
}

namespace {

std::string matrix_text(const IntMatrix& a) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i) os << ", ";
    os << "[";
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? ", " : "") << a(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

std::string list_text(const std::vector<std::string>& items) {
  std::string s = "[";
  for (std::size_t k = 0; k < items.size(); ++k) s += (k ? ", " : "") + items[k];
  return s + "]";
}

}  // namespace

std::string serialize_algebra_file(const AlgebraFile& file) {
  const auto& spec = file.spec;
  std::ostringstream os;
  os << "[algebra]\n";
  os << "name = " << spec.name << "\n";
  os << "n = " << spec.n << "\n";
  os << "m = " << spec.m << "\n";
  os << "S = " << matrix_text(spec.S) << "\n";
  os << "skew_constants = [";
  for (std::size_t k = 0; k < spec.skew_constants.size(); ++k) os << (k ? ", " : "") << spec.skew_constants[k];
  os << "]\n";
  if (spec.W.rows() != 0) os << "\n[weights]\nW = " << matrix_text(spec.W) << "\n";
  for (const auto& [key, r] : spec.relations) {
    if (r.is_zero()) continue;
    os << "\n[[relation]]\n";
    os << "i = " << key.first + 1 << "\n";
    os << "j = " << key.second + 1 << "\n";
    os << "r = " << core::to_string(r) << "\n";
  }
  for (const auto& st : file.strata) {
    os << "\n[[stratum]]\n";
    os << "name = " << st.name << "\n";
    for (const auto& [name, expr] : st.derived) os << "derive = " << name << " : " << expr << "\n";
    os << "vanish = " << list_text(st.vanish) << "\n";
    os << "invert = " << list_text(st.invert) << "\n";
  }
  return os.str();
}

}  // namespace qsolv::strat
