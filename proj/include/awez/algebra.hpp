#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "awez/linalg.hpp"
#include "awez/linear.hpp"

namespace awez {

// A product left the enumerated part of the basis.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string algebra, int degree)
      : std::runtime_error("degree " + std::to_string(degree) + " exceeds the basis budget of " +
                           algebra),
        degree_(degree) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Associative unital algebra with a fixed (internally) graded or filtered
// basis, enumerated up to a degree budget. Basis elements are integer ids;
// id 0 is always the unit. Ids are ordered by degree.
class Algebra {
 public:
  virtual ~Algebra() = default;

  Field field() const { return field_; }
  const std::string& name() const { return name_; }
  int budget() const { return budget_; }
  int size() const { return static_cast<int>(degrees_.size()); }
  static constexpr int unit() { return 0; }
  int degree(int id) const { return degrees_.at(static_cast<std::size_t>(id)); }
  // Whether products of homogeneous elements are homogeneous (otherwise the
  // degree is only a filtration).
  bool graded() const { return graded_; }

  const std::vector<int>& graded_basis(int d) const;
  std::vector<int> basis_up_to(int d) const;

  virtual Element multiply(int a, int b) const = 0;
  Element multiply(const Element& a, const Element& b) const;
  Element multiply(const Element& a, int b) const;
  Element multiply(int a, const Element& b) const;
  Element basis_element(int id) const { return Element(field_, id); }
  // Drops the unit component: the projection A -> A-bar onto non-unit words.
  Element project_reduced(const Element& a) const {
    Element r = a;
    r.add(unit(), -a.coeff(unit()));
    return r;
  }

  virtual std::string format(int id) const = 0;
  std::string format(const Element& e) const;
  // Parses sums of products of atoms, e.g. "x^2*y - 3/2*x + 1".
  Element parse(std::string_view text) const;
  // Like parse, but the text must denote a single basis element.
  int parse_basis(std::string_view text) const;

  // Algebra generators used by the twist extension and the Koszul complex.
  const std::vector<int>& generators() const { return generators_; }
  // Writes a non-unit basis element as generator * rest, when possible.
  virtual std::optional<std::pair<int, int>> split_left(int id) const = 0;
  // Quadratic relations as vectors in V (x) V with V spanned by generators():
  // coordinate i * m + j stands for generators()[i] (x) generators()[j].
  virtual std::optional<std::vector<SparseVector>> quadratic_relations() const {
    return std::nullopt;
  }

 protected:
  Algebra(Field f, std::string name, int budget) : field_(f), name_(std::move(name)), budget_(budget) {}

  // Registers basis element with the given degree; ids must come in
  // non-decreasing degree order starting with the unit.
  int add_basis(int degree);
  void set_graded(bool g) { graded_ = g; }
  void set_generators(std::vector<int> g) { generators_ = std::move(g); }
  // Resolves a name occurring in parse(); throws ParseError if unknown.
  virtual Element atom(std::string_view name) const = 0;

 private:
  Field field_;
  std::string name_;
  int budget_;
  bool graded_ = true;
  std::vector<int> degrees_;
  std::vector<std::vector<int>> by_degree_;
  std::vector<int> generators_;
};

// Commutative polynomial ring k[x_1, ..., x_m] with the monomial basis.
class PolynomialAlgebra : public Algebra {
 public:
  PolynomialAlgebra(Field f, std::vector<std::string> variables, int budget,
                    std::string name = "");

  int variables() const { return static_cast<int>(vars_.size()); }
  const std::string& variable_name(int i) const { return vars_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& exponents(int id) const { return monomials_.at(static_cast<std::size_t>(id)); }
  int monomial(const std::vector<int>& exponents) const;

  Element multiply(int a, int b) const override;
  using Algebra::multiply;
  std::string format(int id) const override;
  using Algebra::format;
  std::optional<std::pair<int, int>> split_left(int id) const override;
  std::optional<std::vector<SparseVector>> quadratic_relations() const override;

 protected:
  Element atom(std::string_view name) const override;

 private:
  std::vector<std::string> vars_;
  std::vector<std::vector<int>> monomials_;
  std::map<std::vector<int>, int> index_;
};

// Finite-dimensional algebra given by a structure-constant table.
class StructureConstantAlgebra : public Algebra {
 public:
  // names[0] is the unit. table[a][b] is the product of basis elements a, b.
  StructureConstantAlgebra(Field f, std::string name, std::vector<std::string> names,
                           std::vector<int> degrees, std::vector<std::vector<Element>> table);

  Element multiply(int a, int b) const override;
  using Algebra::multiply;
  std::string format(int id) const override;
  using Algebra::format;
  std::optional<std::pair<int, int>> split_left(int id) const override;

  // Declares generators and a factorization id = generator * rest for
  // every non-unit basis element.
  void set_factorization(std::vector<int> generators, std::map<int, std::pair<int, int>> split);

 protected:
  Element atom(std::string_view name) const override;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<Element>> table_;
  std::map<int, std::pair<int, int>> split_;
};

// Algebra presented by generators and rewriting rules b*a -> (combination of
// words) for every pair of generators b > a, with the ordered monomials as
// basis (PBW type). The degree is word length, a filtration in general.
class RewritingAlgebra : public Algebra {
 public:
  struct Rule {
    int upper;  // generator index b
    int lower;  // generator index a < b
    Linear<std::vector<int>> rhs;  // combination of generator-index words
  };
  RewritingAlgebra(Field f, std::vector<std::string> generators, std::vector<Rule> rules,
                   int budget, std::string name = "");
  // Rules as text, e.g. {"y*x -> x*y + x"}.
  static std::unique_ptr<RewritingAlgebra> from_text(Field f, std::vector<std::string> generators,
                                                     const std::vector<std::string>& rules,
                                                     int budget, std::string name = "");

  Element multiply(int a, int b) const override;
  using Algebra::multiply;
  std::string format(int id) const override;
  using Algebra::format;
  std::optional<std::pair<int, int>> split_left(int id) const override;

 protected:
  Element atom(std::string_view name) const override;

 private:
  Element normal_form(const std::vector<int>& word) const;
  std::vector<int> word_of(int id) const;

  std::vector<std::string> gens_;
  std::map<std::pair<int, int>, Linear<std::vector<int>>> rules_;
  std::vector<std::vector<int>> monomials_;
  std::map<std::vector<int>, int> index_;
};

// Finite group given by permutation generators, elements listed in
// breadth-first order of generator words (identity first).
class FiniteGroup {
 public:
  // generators: name -> image list of a permutation of {0, ..., k-1}.
  explicit FiniteGroup(std::vector<std::pair<std::string, std::vector<int>>> generators);

  int order() const { return static_cast<int>(elements_.size()); }
  int multiply(int g, int h) const { return table_[g][h]; }
  int inverse(int g) const { return inverse_[g]; }
  const std::string& name(int g) const { return names_[g]; }
  // Shortest generator word (indices into generator list) for each element.
  const std::vector<int>& word(int g) const { return words_[g]; }
  int generator(int i) const { return gen_ids_[i]; }
  int generator_count() const { return static_cast<int>(gen_ids_.size()); }
  const std::string& generator_name(int i) const { return gen_names_[i]; }

  // Group algebra kG with the group elements as basis (degree 0).
  std::unique_ptr<StructureConstantAlgebra> algebra(Field f, const std::string& name) const;

 private:
  std::vector<std::string> gen_names_;
  std::vector<int> gen_ids_;
  std::vector<std::vector<int>> elements_;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> words_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
};

}  // namespace awez
