#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "awez/twist.hpp"

namespace awez {

using Json = nlohmann::ordered_json;

// A malformed instance or element file. where() is "file:byte N" for syntax
// errors and "file#/json/pointer" for semantic ones.
class InstanceError : public std::runtime_error {
 public:
  InstanceError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// A validated instance file:
//
//   { "name": "...", "field": "Q" | "F<p>",
//     "R": {"family": "polynomial", "generators": ["x", ...]},
//     "S": {"family": "polynomial", "generators": [...]}
//        | {"family": "group", "generators": {"g": [1, 0], ...}},
//     "twist": {"kind": "generator-rules", "rules": [["y", "x", "x*y + x"], ...],
//               "override": [...]}
//            | {"kind": "group-action", "images": {"g": ["-x", ...], ...}},
//     "budget": {"hdeg": 3, "gdeg": 4},
//     "resolutions": ["bar", "reduced-bar", ...],
//     "elements": {"a": <element>, ...},
//     "expect": [{"name": "AW(a)=b", "map": "aw", "input": "a", "output": "b"}, ...] }
//
// "override" replaces the listed generator values after extension, which is
// how corrupted twists are described. Expectations with "equal": false assert
// a difference.
struct InstanceDescription {
  std::string source;
  std::string name;
  Field field = Field::rationals();
  int hdeg = 3;
  int gdeg = 3;
  Json doc;
};

InstanceDescription parse_instance(const std::string& path);
InstanceDescription parse_instance_text(const std::string& text, const std::string& source);
// A bundled instance name such as "example-5.2" resolves to dir/<name>.json;
// anything naming an existing file is used as is.
std::string resolve_instance(const std::string& name_or_path, const std::string& dir);

// The algebras and twist described by an instance, owned together. Field and
// budgets come from the description (adjust them there to override). Algebra
// bases are enumerated up to gdeg + 4.
class Instance {
 public:
  explicit Instance(InstanceDescription d);
  Instance(const Instance&) = delete;
  Instance& operator=(const Instance&) = delete;

  const InstanceDescription& description() const { return desc_; }
  const std::string& name() const { return desc_.name; }
  Field field() const { return field_; }
  int hdeg() const { return desc_.hdeg; }
  int gdeg() const { return desc_.gdeg; }

  const Algebra& R() const { return *r_; }
  const Algebra& S() const { return *s_; }
  const TwistingMap& twist() const { return *tau_; }
  const TwistedProductAlgebra& algebra() const { return *a_; }
  // Present for group-action instances.
  const GroupHopfAlgebra* group_hopf() const { return hopf_.get(); }
  const GroupAction* action() const { return action_.get(); }
  // R is a polynomial ring, so its Koszul resolution is available.
  bool koszul_ready() const { return koszul_ready_; }
  // The twist is a relabelled override of a consistent extension.
  bool corrupted() const { return base_ != nullptr; }
  std::vector<std::string> resolutions() const;

 private:
  InstanceDescription desc_;
  Field field_;
  std::unique_ptr<FiniteGroup> group_;
  std::unique_ptr<StructureConstantAlgebra> kg_;
  std::unique_ptr<GroupHopfAlgebra> hopf_;
  std::unique_ptr<Algebra> r_;
  std::unique_ptr<Algebra> s_poly_;
  const Algebra* s_ = nullptr;
  std::unique_ptr<GroupAction> action_;
  std::unique_ptr<TwistingMap> base_;
  std::unique_ptr<TwistingMap> tau_;
  std::unique_ptr<TwistedProductAlgebra> a_;
  bool koszul_ready_ = false;
};

}  // namespace awez
