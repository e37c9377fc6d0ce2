#pragma once

#include <functional>
#include <string>

#include "awez/complex.hpp"
#include "awez/report.hpp"

namespace awez {

// A degree-preserving map between two complexes over the same algebra, given
// on basis words. Nothing about chain-map or bimodule behaviour is assumed;
// the check_* functions below test it.
class ChainMap {
 public:
  using Oracle = std::function<Tensor(int n, const Word& w)>;

  ChainMap(std::string name, const Complex& source, const Complex& target, Oracle f)
      : name_(std::move(name)), source_(&source), target_(&target), f_(std::move(f)) {}

  const std::string& name() const { return name_; }
  const Complex& source() const { return *source_; }
  const Complex& target() const { return *target_; }

  Tensor apply(int n, const Word& w) const { return f_(n, w); }
  Tensor apply(int n, const Tensor& t) const;

 private:
  std::string name_;
  const Complex* source_;
  const Complex* target_;
  Oracle f_;
};

ChainMap identity_map(const Complex& p);
// g after f.
ChainMap compose(const ChainMap& g, const ChainMap& f);

// d f = f d on every basis word of P_n, 1 <= n <= n_max, of internal degree
// <= d_max, and eps f = eps in degree 0.
CheckReport check_chain_map(const ChainMap& f, int n_max, int d_max);

// f(a w b) = a f(w) b for basis words w of degree <= d_max and a, b running
// over the algebra basis up to degree a_max.
CheckReport check_bimodule_map(const ChainMap& f, int n_max, int d_max, int a_max);

// f g = 1 on the free generators of g's source in degrees n <= n_max and
// internal degree <= d_max.
CheckReport check_identity_composition(const ChainMap& f, const ChainMap& g, int n_max, int d_max);

}  // namespace awez
