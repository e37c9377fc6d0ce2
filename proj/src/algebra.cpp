#include "awez/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace awez {

namespace {

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'';
}

// Recursive-descent parser for sums of products over an algebra.
class ExprParser {
 public:
  using AtomFn = std::function<Element(std::string_view)>;
  using MulFn = std::function<Element(const Element&, const Element&)>;

  ExprParser(Field f, std::string_view text, AtomFn atom, MulFn mul)
      : field_(f), text_(text), atom_(std::move(atom)), mul_(std::move(mul)) {}

  Element run() {
    Element e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse '" + std::string(text_) + "': " + what);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Element expr() {
    Element out(field_);
    bool first = true;
    for (;;) {
      Scalar sign = Scalar::one(field_);
      if (eat('-'))
        sign = -sign;
      else if (!eat('+') && !first)
        break;
      first = false;
      out.add(term(), sign);
      skip();
      if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-')) break;
    }
    return out;
  }

  Element term() {
    Element e = factor();
    while (eat('*')) e = mul_(e, factor());
    return e;
  }

  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  Element power(Element base) {
    if (!eat('^')) return base;
    long k = integer();
    Element r(field_, Algebra::unit());
    for (long i = 0; i < k; ++i) r = mul_(r, base);
    return r;
  }

  Element factor() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Element e = expr();
      if (!eat(')')) fail("missing ')'");
      return power(e);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      integer();
      if (eat('/')) integer();
      Scalar v = Scalar::parse(field_, text_.substr(start, pos_ - start));
      Element e(Algebra::unit(), v);
      if (e.is_zero()) e = Element(field_);
      return power(e);
    }
    if (!ident_char(c)) fail("unexpected '" + std::string(1, c) + "'");
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return power(atom_(text_.substr(start, pos_ - start)));
  }

  Field field_;
  std::string_view text_;
  AtomFn atom_;
  MulFn mul_;
  std::size_t pos_ = 0;
};

std::string default_name(const std::vector<std::string>& vars) {
  std::string n = "k[";
  for (std::size_t i = 0; i < vars.size(); ++i) n += (i ? "," : "") + vars[i];
  return n + "]";
}

std::string join_term(const std::string& coeff, const std::string& word, bool first) {
  bool neg = !coeff.empty() && coeff[0] == '-';
  std::string mag = neg ? coeff.substr(1) : coeff;
  std::string body;
  if (word == "1")
    body = mag;
  else if (mag == "1")
    body = word;
  else
    body = mag + "*" + word;
  if (first) return (neg ? "-" : "") + body;
  return (neg ? " - " : " + ") + body;
}

}  // namespace

int Algebra::add_basis(int degree) {
  if (degree < 0 || (!degrees_.empty() && degree < degrees_.back()))
    throw std::logic_error("basis must be registered in degree order");
  degrees_.push_back(degree);
  if (static_cast<int>(by_degree_.size()) <= degree) by_degree_.resize(degree + 1);
  int id = static_cast<int>(degrees_.size()) - 1;
  by_degree_[degree].push_back(id);
  return id;
}

const std::vector<int>& Algebra::graded_basis(int d) const {
  static const std::vector<int> empty;
  if (d < 0 || d >= static_cast<int>(by_degree_.size())) return empty;
  return by_degree_[d];
}

std::vector<int> Algebra::basis_up_to(int d) const {
  std::vector<int> out;
  for (int k = 0; k <= d && k < static_cast<int>(by_degree_.size()); ++k)
    out.insert(out.end(), by_degree_[k].begin(), by_degree_[k].end());
  return out;
}

Element Algebra::multiply(const Element& a, const Element& b) const {
  Element out(field_);
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) out.add(multiply(x, y), cx * cy);
  return out;
}

Element Algebra::multiply(const Element& a, int b) const {
  Element out(field_);
  for (const auto& [x, cx] : a) out.add(multiply(x, b), cx);
  return out;
}

Element Algebra::multiply(int a, const Element& b) const {
  Element out(field_);
  for (const auto& [y, cy] : b) out.add(multiply(a, y), cy);
  return out;
}

std::string Algebra::format(const Element& e) const {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [id, c] : e) {
    out += join_term(c.str(), format(id), first);
    first = false;
  }
  return out;
}

Element Algebra::parse(std::string_view text) const {
  ExprParser p(
      field_, text, [this](std::string_view n) { return atom(n); },
      [this](const Element& a, const Element& b) { return multiply(a, b); });
  return p.run();
}

int Algebra::parse_basis(std::string_view text) const {
  Element e = parse(text);
  if (e.size() != 1 || !e.begin()->second.is_one())
    throw ParseError("'" + std::string(text) + "' is not a basis word of " + name_);
  return e.begin()->first;
}

// --- PolynomialAlgebra -----------------------------------------------------

PolynomialAlgebra::PolynomialAlgebra(Field f, std::vector<std::string> variables, int budget,
                                     std::string name)
    : Algebra(f, name.empty() ? default_name(variables) : name, budget), vars_(std::move(variables)) {
  int m = static_cast<int>(vars_.size());
  std::set<std::string> seen(vars_.begin(), vars_.end());
  if (static_cast<int>(seen.size()) != m) throw std::invalid_argument("repeated variable name");
  // Monomials of degree d in lexicographically decreasing exponent order.
  for (int d = 0; d <= budget; ++d) {
    std::vector<std::vector<int>> mons;
    std::function<void(int, int, std::vector<int>&)> rec = [&](int i, int left, std::vector<int>& e) {
      if (i == m - 1 || m == 0) {
        if (m > 0) e[i] = left;
        if (m > 0 || left == 0) mons.push_back(e);
        return;
      }
      for (int a = left; a >= 0; --a) {
        e[i] = a;
        rec(i + 1, left - a, e);
      }
      e[i] = 0;
    };
    std::vector<int> e(static_cast<std::size_t>(m), 0);
    rec(0, d, e);
    for (auto& mon : mons) {
      int id = add_basis(d);
      index_[mon] = id;
      monomials_.push_back(mon);
    }
  }
  std::vector<int> gens;
  for (int i = 0; i < m; ++i) {
    std::vector<int> e(static_cast<std::size_t>(m), 0);
    e[i] = 1;
    if (budget >= 1) gens.push_back(index_.at(e));
  }
  set_generators(std::move(gens));
}

int PolynomialAlgebra::monomial(const std::vector<int>& e) const {
  auto it = index_.find(e);
  if (it != index_.end()) return it->second;
  throw BudgetExceeded(name(), std::accumulate(e.begin(), e.end(), 0));
}

Element PolynomialAlgebra::multiply(int a, int b) const {
  const auto& ea = exponents(a);
  const auto& eb = exponents(b);
  std::vector<int> e(ea.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
  return Element(field(), monomial(e));
}

std::string PolynomialAlgebra::format(int id) const {
  const auto& e = exponents(id);
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars_[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::optional<std::pair<int, int>> PolynomialAlgebra::split_left(int id) const {
  auto e = exponents(id);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    --e[i];
    return std::make_pair(generators()[i], index_.at(e));
  }
  return std::nullopt;
}

std::optional<std::vector<SparseVector>> PolynomialAlgebra::quadratic_relations() const {
  int m = variables();
  std::vector<SparseVector> rel;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      SparseVector v(field());
      v.add(i * m + j, Scalar::one(field()));
      v.add(j * m + i, -Scalar::one(field()));
      rel.push_back(std::move(v));
    }
  return rel;
}

Element PolynomialAlgebra::atom(std::string_view n) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == n) return Element(field(), generators()[i]);
  throw ParseError("unknown variable '" + std::string(n) + "' in " + name());
}

// --- StructureConstantAlgebra ----------------------------------------------

StructureConstantAlgebra::StructureConstantAlgebra(Field f, std::string name,
                                                   std::vector<std::string> names,
                                                   std::vector<int> degrees,
                                                   std::vector<std::vector<Element>> table)
    : Algebra(f, std::move(name), degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end())),
      names_(std::move(names)),
      table_(std::move(table)) {
  if (names_.size() != degrees.size() || table_.size() != names_.size())
    throw std::invalid_argument("structure-constant table has inconsistent sizes");
  for (int d : degrees) add_basis(d);
  for (std::size_t a = 0; a < table_.size(); ++a) {
    if (table_[a].size() != names_.size())
      throw std::invalid_argument("structure-constant table has inconsistent sizes");
    for (std::size_t b = 0; b < table_.size(); ++b)
      for (const auto& [id, c] : table_[a][b])
        if (degrees[id] != degrees[a] + degrees[b]) set_graded(false);
  }
}

Element StructureConstantAlgebra::multiply(int a, int b) const { return table_.at(a).at(b); }

std::string StructureConstantAlgebra::format(int id) const { return names_.at(id); }

std::optional<std::pair<int, int>> StructureConstantAlgebra::split_left(int id) const {
  auto it = split_.find(id);
  if (it == split_.end()) return std::nullopt;
  return it->second;
}

void StructureConstantAlgebra::set_factorization(std::vector<int> generators,
                                                 std::map<int, std::pair<int, int>> split) {
  set_generators(std::move(generators));
  split_ = std::move(split);
}

Element StructureConstantAlgebra::atom(std::string_view n) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == n) return Element(field(), static_cast<int>(i));
  throw ParseError("unknown basis element '" + std::string(n) + "' in " + name());
}

// --- RewritingAlgebra ------------------------------------------------------

RewritingAlgebra::RewritingAlgebra(Field f, std::vector<std::string> generators,
                                   std::vector<Rule> rules, int budget, std::string name)
    : Algebra(f, std::move(name), budget), gens_(std::move(generators)) {
  int m = static_cast<int>(gens_.size());
  for (auto& r : rules) {
    if (r.upper <= r.lower || r.upper >= m || r.lower < 0)
      throw std::invalid_argument("rewriting rules must have the form b*a -> ... with b > a");
    for (const auto& [w, c] : r.rhs)
      if (w.size() != 2) set_graded(false);
    rules_[{r.upper, r.lower}] = r.rhs;
  }
  // Ordered monomials, same ordering as PolynomialAlgebra.
  for (int d = 0; d <= budget; ++d) {
    std::vector<int> e(static_cast<std::size_t>(m), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (m == 0) {
        if (left == 0) {
          index_[e] = add_basis(d);
          monomials_.push_back(e);
        }
        return;
      }
      if (i == m - 1) {
        e[i] = left;
        index_[e] = add_basis(d);
        monomials_.push_back(e);
        e[i] = 0;
        return;
      }
      for (int a = left; a >= 0; --a) {
        e[i] = a;
        rec(i + 1, left - a);
      }
      e[i] = 0;
    };
    rec(0, d);
  }
  std::vector<int> gens;
  for (int i = 0; i < m && budget >= 1; ++i) {
    std::vector<int> e(static_cast<std::size_t>(m), 0);
    e[i] = 1;
    gens.push_back(index_.at(e));
  }
  set_generators(std::move(gens));
}

std::unique_ptr<RewritingAlgebra> RewritingAlgebra::from_text(Field f,
                                                              std::vector<std::string> generators,
                                                              const std::vector<std::string>& rules,
                                                              int budget, std::string name) {
  auto index_of = [&](std::string_view n) -> int {
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (generators[i] == n) return static_cast<int>(i);
    throw ParseError("unknown generator '" + std::string(n) + "'");
  };
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  // A word: product of names and numbers separated by '*'.
  auto parse_product = [&](std::string_view t, Scalar& coeff) {
    std::vector<int> word;
    std::size_t pos = 0;
    while (pos <= t.size()) {
      std::size_t star = t.find('*', pos);
      std::string_view tok = trim(t.substr(pos, star == std::string_view::npos ? t.npos : star - pos));
      if (tok.empty()) throw ParseError("empty factor in rule");
      if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
        coeff *= Scalar::parse(f, tok);
      } else if (tok != "1") {
        std::size_t caret = tok.find('^');
        int times = caret == tok.npos ? 1 : std::stoi(std::string(tok.substr(caret + 1)));
        int g = index_of(trim(tok.substr(0, caret)));
        for (int k = 0; k < times; ++k) word.push_back(g);
      }
      if (star == std::string_view::npos) break;
      pos = star + 1;
    }
    return word;
  };
  std::vector<Rule> parsed;
  for (const auto& text : rules) {
    std::size_t arrow = text.find("->");
    if (arrow == std::string::npos) throw ParseError("rule without '->': " + text);
    Scalar one = Scalar::one(f);
    std::vector<int> lhs = parse_product(trim(std::string_view(text).substr(0, arrow)), one);
    if (lhs.size() != 2 || lhs[0] <= lhs[1]) throw ParseError("rule must rewrite b*a with b > a: " + text);
    Linear<std::vector<int>> rhs(f);
    std::string_view r = trim(std::string_view(text).substr(arrow + 2));
    std::size_t pos = 0;
    Scalar sign = one;
    if (!r.empty() && (r[0] == '-' || r[0] == '+')) {
      if (r[0] == '-') sign = -one;
      pos = 1;
    }
    for (;;) {
      std::size_t next = r.find_first_of("+-", pos);
      std::string_view tok = trim(r.substr(pos, next == r.npos ? r.npos : next - pos));
      if (tok != "0") {
        Scalar c = sign;
        std::vector<int> w = parse_product(tok, c);
        rhs.add(w, c);
      }
      if (next == r.npos) break;
      sign = r[next] == '-' ? -one : one;
      pos = next + 1;
    }
    parsed.push_back(Rule{lhs[0], lhs[1], std::move(rhs)});
  }
  return std::make_unique<RewritingAlgebra>(f, std::move(generators), std::move(parsed), budget,
                                            std::move(name));
}

std::vector<int> RewritingAlgebra::word_of(int id) const {
  std::vector<int> w;
  const auto& e = monomials_.at(id);
  for (std::size_t i = 0; i < e.size(); ++i) w.insert(w.end(), e[i], static_cast<int>(i));
  return w;
}

Element RewritingAlgebra::normal_form(const std::vector<int>& word) const {
  Element out(field());
  Linear<std::vector<int>> pending(field(), word);
  while (!pending.is_zero()) {
    auto [w, c] = *pending.begin();
    pending.add(w, -c);
    std::size_t i = 0;
    while (i + 1 < w.size() && w[i] <= w[i + 1]) ++i;
    if (i + 1 >= w.size()) {
      std::vector<int> e(gens_.size(), 0);
      for (int g : w) ++e[g];
      auto it = index_.find(e);
      if (it == index_.end()) throw BudgetExceeded(name(), static_cast<int>(w.size()));
      out.add(it->second, c);
      continue;
    }
    auto rule = rules_.find({w[i], w[i + 1]});
    if (rule == rules_.end())
      throw std::logic_error("no rewriting rule for " + gens_[w[i]] + "*" + gens_[w[i + 1]]);
    for (const auto& [r, rc] : rule->second) {
      std::vector<int> nw(w.begin(), w.begin() + static_cast<long>(i));
      nw.insert(nw.end(), r.begin(), r.end());
      nw.insert(nw.end(), w.begin() + static_cast<long>(i) + 2, w.end());
      pending.add(nw, c * rc);
    }
  }
  return out;
}

Element RewritingAlgebra::multiply(int a, int b) const {
  std::vector<int> w = word_of(a);
  std::vector<int> wb = word_of(b);
  w.insert(w.end(), wb.begin(), wb.end());
  return normal_form(w);
}

std::string RewritingAlgebra::format(int id) const {
  const auto& e = monomials_.at(id);
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += gens_[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::optional<std::pair<int, int>> RewritingAlgebra::split_left(int id) const {
  std::vector<int> w = word_of(id);
  if (w.empty()) return std::nullopt;
  std::vector<int> e = monomials_.at(id);
  --e[w[0]];
  return std::make_pair(generators()[w[0]], index_.at(e));
}

Element RewritingAlgebra::atom(std::string_view n) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i] == n) return Element(field(), generators()[i]);
  throw ParseError("unknown generator '" + std::string(n) + "' in " + name());
}

// --- FiniteGroup -----------------------------------------------------------

FiniteGroup::FiniteGroup(std::vector<std::pair<std::string, std::vector<int>>> generators) {
  std::size_t k = 0;
  for (const auto& [n, perm] : generators) {
    k = std::max(k, perm.size());
    gen_names_.push_back(n);
  }
  auto normalize = [k](std::vector<int> p) {
    for (std::size_t i = p.size(); i < k; ++i) p.push_back(static_cast<int>(i));
    std::vector<int> check = p;
    std::sort(check.begin(), check.end());
    for (std::size_t i = 0; i < check.size(); ++i)
      if (check[i] != static_cast<int>(i)) throw std::invalid_argument("generator is not a permutation");
    return p;
  };
  auto compose = [](const std::vector<int>& g, const std::vector<int>& h) {
    std::vector<int> r(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) r[i] = g[h[i]];
    return r;
  };
  std::vector<std::vector<int>> gens;
  for (const auto& [n, perm] : generators) gens.push_back(normalize(perm));
  std::vector<int> id(k);
  std::iota(id.begin(), id.end(), 0);
  std::map<std::vector<int>, int> index;
  elements_.push_back(id);
  words_.push_back({});
  index[id] = 0;
  for (std::size_t at = 0; at < elements_.size(); ++at) {
    for (std::size_t a = 0; a < gens.size(); ++a) {
      std::vector<int> next = compose(gens[a], elements_[at]);
      if (index.count(next)) continue;
      index[next] = static_cast<int>(elements_.size());
      std::vector<int> w{static_cast<int>(a)};
      w.insert(w.end(), words_[at].begin(), words_[at].end());
      elements_.push_back(next);
      words_.push_back(w);
    }
  }
  for (const auto& g : gens) gen_ids_.push_back(index.at(g));
  int n = order();
  table_.assign(n, std::vector<int>(n));
  inverse_.assign(n, 0);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      table_[g][h] = index.at(compose(elements_[g], elements_[h]));
      if (table_[g][h] == 0) inverse_[g] = h;
    }
  for (int g = 0; g < n; ++g) {
    std::string name;
    for (int a : words_[g]) name += (name.empty() ? "" : ".") + gen_names_[a];
    names_.push_back(g == 0 ? "1" : name);
  }
}

std::unique_ptr<StructureConstantAlgebra> FiniteGroup::algebra(Field f, const std::string& name) const {
  int n = order();
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) table[g][h] = Element(f, multiply(g, h));
  auto alg = std::make_unique<StructureConstantAlgebra>(f, name, names_, std::vector<int>(n, 0),
                                                        std::move(table));
  std::map<int, std::pair<int, int>> split;
  for (int g = 1; g < n; ++g) {
    const auto& w = words_[g];
    int rest = 0;
    for (std::size_t i = w.size(); i-- > 1;) rest = multiply(gen_ids_[w[i]], rest);
    split[g] = {gen_ids_[w[0]], rest};
  }
  std::vector<int> gens;
  for (int g : gen_ids_)
    if (g != 0 && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  alg->set_factorization(std::move(gens), std::move(split));
  return alg;
}

}  // namespace awez
