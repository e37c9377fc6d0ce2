#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "awez/algebra.hpp"
#include "awez/report.hpp"

namespace awez {

class TwistInconsistent : public std::runtime_error {
 public:
  TwistInconsistent(const std::string& what, std::string witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  // The failing quadruple (s, s', r, r'), rendered.
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

class NotInvertible : public std::runtime_error {
 public:
  NotInvertible(int deg_r, int deg_s)
      : std::runtime_error("twisting map is singular on the block of degrees (" +
                           std::to_string(deg_r) + ", " + std::to_string(deg_s) + ")"),
        degrees_{deg_r, deg_s} {}
  std::pair<int, int> degrees() const { return degrees_; }

 private:
  std::pair<int, int> degrees_;
};

class ActionNotAdmissible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Twisting map tau: S (x) R -> R (x) S given on basis pairs. Values are
// combinations of two-letter words {r, s}; inverse values are words {s, r}.
class TwistingMap {
 public:
  TwistingMap(const Algebra& r, const Algebra& s, bool strongly_graded)
      : r_(r), s_(s), strongly_graded_(strongly_graded && r.graded() && s.graded()) {}
  virtual ~TwistingMap() = default;

  const Algebra& R() const { return r_; }
  const Algebra& S() const { return s_; }
  Field field() const { return r_.field(); }
  // Bidegree-preserving on homogeneous pairs (otherwise only the total
  // degree filtration is respected).
  bool strongly_graded() const { return strongly_graded_; }

  Tensor apply(int s, int r) const;
  // Linear extension on words {s, r}.
  Tensor apply(const Tensor& sr) const;
  Tensor apply_inverse(int r, int s) const;
  Tensor apply_inverse(const Tensor& rs) const;
  // Inverse computed by blockwise linear algebra, ignoring any closed form.
  Tensor linear_inverse(int r, int s) const;
  bool has_closed_inverse() const { return closed_inverse(0, 0).has_value(); }

  std::string format_rs(const Tensor& rs) const;
  std::string format_sr(const Tensor& sr) const;

 protected:
  virtual Tensor compute(int s, int r) const = 0;
  virtual std::optional<Tensor> closed_inverse(int, int) const { return std::nullopt; }

 private:
  void invert_block(int r, int s) const;

  const Algebra& r_;
  const Algebra& s_;
  bool strongly_graded_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, Tensor> cache_;
  mutable std::map<std::pair<int, int>, Tensor> inverse_cache_;
};

// Twist determined by its values on pairs of algebra generators, extended by
// the hexagon identity (left factor first, then the right factor).
class GeneratorTwist : public TwistingMap {
 public:
  // rules: (S-generator id, R-generator id) -> combination of words {r, s}.
  GeneratorTwist(const Algebra& r, const Algebra& s, std::map<std::pair<int, int>, Tensor> rules);

 protected:
  Tensor compute(int s, int r) const override;

 private:
  std::map<std::pair<int, int>, Tensor> rules_;
};

// Parses generator rules such as {"y", "x", "x*y + x*1"}: the right side is a
// sum of terms "c*r*s" read as c * (r (x) s), with r a word of R and s of S.
std::map<std::pair<int, int>, Tensor> parse_generator_rules(
    const Algebra& r, const Algebra& s, const std::vector<std::array<std::string, 3>>& rules);

// extend_twist_from_generators: builds a GeneratorTwist and certifies it with
// the hexagon check up to the given total degree; throws TwistInconsistent.
std::unique_ptr<TwistingMap> extend_twist_from_generators(
    const Algebra& r, const Algebra& s, std::map<std::pair<int, int>, Tensor> rules, int budget);

// Same values as base except on the listed pairs (used for negative controls).
class OverrideTwist : public TwistingMap {
 public:
  OverrideTwist(const TwistingMap& base, std::map<std::pair<int, int>, Tensor> overrides)
      : TwistingMap(base.R(), base.S(), false), base_(base), overrides_(std::move(overrides)) {}

 protected:
  Tensor compute(int s, int r) const override;

 private:
  const TwistingMap& base_;
  std::map<std::pair<int, int>, Tensor> overrides_;
};

class HopfAlgebra {
 public:
  explicit HopfAlgebra(const Algebra& h) : h_(h) {}
  virtual ~HopfAlgebra() = default;
  const Algebra& algebra() const { return h_; }
  // Words {h1, h2}.
  virtual Tensor coproduct(int h) const = 0;
  virtual Scalar counit(int h) const = 0;
  virtual Element antipode(int h) const = 0;
  virtual Element antipode_inverse(int h) const = 0;

 private:
  const Algebra& h_;
};

// kG with group-like basis.
class GroupHopfAlgebra : public HopfAlgebra {
 public:
  GroupHopfAlgebra(const FiniteGroup& g, const Algebra& kg) : HopfAlgebra(kg), group_(g) {}
  const FiniteGroup& group() const { return group_; }
  Tensor coproduct(int h) const override { return Tensor(algebra().field(), Word{h, h}); }
  Scalar counit(int) const override { return Scalar::one(algebra().field()); }
  Element antipode(int h) const override { return Element(algebra().field(), group_.inverse(h)); }
  Element antipode_inverse(int h) const override { return antipode(h); }

 private:
  const FiniteGroup& group_;
};

// Coassociativity, counit and antipode laws on all basis elements.
CheckReport check_hopf_axioms(const HopfAlgebra& h);

// Left H-module algebra structure on R.
class HopfAction {
 public:
  HopfAction(const HopfAlgebra& h, const Algebra& r) : h_(h), r_(r) {}
  virtual ~HopfAction() = default;
  const HopfAlgebra& hopf() const { return h_; }
  const Algebra& module() const { return r_; }
  virtual Element act(int h, int r) const = 0;
  Element act(int h, const Element& r) const;
  Element act(const Element& h, const Element& r) const;

 private:
  const HopfAlgebra& h_;
  const Algebra& r_;
};

// Group acting by algebra automorphisms; each group generator is given by
// the images of the algebra generators of R.
class GroupAction : public HopfAction {
 public:
  GroupAction(const GroupHopfAlgebra& h, const Algebra& r,
              std::vector<std::vector<Element>> generator_images);
  Element act(int g, int r) const override;
  using HopfAction::act;

 private:
  const GroupHopfAlgebra& group_;
  std::vector<std::vector<Element>> images_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, Element> cache_;
};

// Module-algebra axioms, unit axiom, action associativity and grading, on
// R-basis elements of degree <= budget.
CheckReport check_action_axioms(const HopfAction& a, int budget);

// h (x) r -> sum ^{h1} r (x) h2, with closed inverse r (x) h -> sum h2 (x) ^{S^-1(h1)} r.
class HopfSmashTwist : public TwistingMap {
 public:
  explicit HopfSmashTwist(const HopfAction& a)
      : TwistingMap(a.module(), a.hopf().algebra(), true), action_(a) {}
  const HopfAction& action() const { return action_; }

 protected:
  Tensor compute(int h, int r) const override;
  std::optional<Tensor> closed_inverse(int r, int h) const override;

 private:
  const HopfAction& action_;
};

// check_twist_axiom: unit axioms and the hexagon on every basis quadruple
// (s, s', r, r') of total degree <= budget; the first mismatch is the witness.
CheckReport check_twist_axiom(const TwistingMap& tau, int budget);
// tau^-1 tau = 1 and tau tau^-1 = 1 on basis pairs of total degree <= budget;
// for closed-form inverses also compares with linear inversion.
CheckReport check_twist_inverse(const TwistingMap& tau, int budget);

// The twisted tensor product R (x)_tau S with basis pairs (r, s).
class TwistedProductAlgebra : public Algebra {
 public:
  TwistedProductAlgebra(const TwistingMap& tau, std::string name = "");

  const TwistingMap& twist() const { return tau_; }
  const Algebra& R() const { return tau_.R(); }
  const Algebra& S() const { return tau_.S(); }
  std::pair<int, int> pair(int id) const { return pairs_.at(static_cast<std::size_t>(id)); }
  int id(int r, int s) const;
  Element from_pairs(const Tensor& rs) const;

  Element multiply(int a, int b) const override;
  using Algebra::multiply;
  std::string format(int id) const override;
  using Algebra::format;
  std::optional<std::pair<int, int>> split_left(int id) const override;
  // Rel_R, Rel_S and s r - tau(s r), when both factors are quadratic and tau
  // maps generator pairs to generator pairs.
  std::optional<std::vector<SparseVector>> quadratic_relations() const override;

 protected:
  Element atom(std::string_view name) const override;

 private:
  const TwistingMap& tau_;
  std::vector<std::pair<int, int>> pairs_;
  std::map<std::pair<int, int>, int> index_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, Element> cache_;
};

// Iterated twists through bar words.
//   twist_through_R: S (x) (B_R)_n -> (B_R)_n (x) S, s passes the R-slots left
//   to right; input R-word, output words {r_0, ..., r_{n+1}, s'}.
//   twist_through_S: (B_S)_n (x) R -> R (x) (B_S)_n, r passes the S-slots right
//   to left; output words {r', s_0, ..., s_{n+1}}.
// With reduced set, terms with a unit in an inner slot are dropped.
Tensor twist_through_R(const TwistingMap& tau, int s, const Word& rword, bool reduced);
Tensor twist_through_S(const TwistingMap& tau, const Word& sword, int r, bool reduced);

}  // namespace awez
