#include "awez/chain_map.hpp"

namespace awez {

Tensor ChainMap::apply(int n, const Tensor& t) const {
  Tensor out(target_->field());
  for (const auto& [w, c] : t) out.add(f_(n, w), c);
  return out;
}

ChainMap identity_map(const Complex& p) {
  return ChainMap("1", p, p, [&p](int, const Word& w) { return Tensor(p.field(), w); });
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  return ChainMap(g.name() + " ∘ " + f.name(), f.source(), g.target(),
                  [g, f](int n, const Word& w) { return g.apply(n, f.apply(n, w)); });
}

CheckReport check_chain_map(const ChainMap& f, int n_max, int d_max) {
  const Complex& p = f.source();
  const Complex& q = f.target();
  CheckReport rep;
  rep.name = "chain map " + f.name();
  rep.instance = p.name() + " -> " + q.name();
  rep.hdeg = n_max;
  rep.gdeg = d_max;
  long checked = 0;
  for (int n = 0; n <= n_max && rep.pass; ++n)
    for (int d = 0; d <= d_max && rep.pass; ++d)
      for (const Word& w : p.basis(n, d)) {
        ++checked;
        if (n == 0) {
          Element lhs = q.augmentation(f.apply(0, w));
          Element rhs = p.augmentation(w);
          if (lhs != rhs) {
            rep.fail(p.format(0, w), "ε f = " + p.algebra().format(lhs), "ε = " + p.algebra().format(rhs));
            break;
          }
          continue;
        }
        Tensor lhs = q.differential(n, f.apply(n, w));
        Tensor rhs = f.apply(n - 1, p.differential(n, w));
        if (lhs != rhs) {
          rep.fail(p.format(n, w), "d f = " + q.format(n - 1, lhs), "f d = " + q.format(n - 1, rhs));
          break;
        }
      }
  rep.detail = std::to_string(checked) + " basis words checked";
  return rep;
}

CheckReport check_bimodule_map(const ChainMap& f, int n_max, int d_max, int a_max) {
  const Complex& p = f.source();
  const Complex& q = f.target();
  const Algebra& a = p.algebra();
  CheckReport rep;
  rep.name = "bimodule map " + f.name();
  rep.instance = p.name() + " -> " + q.name();
  rep.hdeg = n_max;
  rep.gdeg = d_max;
  std::vector<int> coeffs = a.basis_up_to(a_max);
  long checked = 0;
  for (int n = 0; n <= n_max && rep.pass; ++n)
    for (const Word& w : p.basis_up_to(n, d_max)) {
      Tensor fw = f.apply(n, w);
      for (int x : coeffs) {
        for (int y : coeffs) {
          ++checked;
          Tensor lhs = f.apply(n, p.act(x, w, y, n));
          Tensor rhs = q.act(a.basis_element(x), fw, a.basis_element(y), n);
          if (lhs != rhs) {
            rep.fail(a.format(x) + " · (" + p.format(n, w) + ") · " + a.format(y), "f(a w b) = " + q.format(n, lhs),
                     "a f(w) b = " + q.format(n, rhs));
            break;
          }
        }
        if (!rep.pass) break;
      }
      if (!rep.pass) break;
    }
  rep.detail = std::to_string(checked) + " triples checked";
  return rep;
}

CheckReport check_identity_composition(const ChainMap& f, const ChainMap& g, int n_max, int d_max) {
  const Complex& p = g.source();
  CheckReport rep;
  rep.name = f.name() + " ∘ " + g.name() + " = 1";
  rep.instance = p.name();
  rep.hdeg = n_max;
  rep.gdeg = d_max;
  long checked = 0;
  for (int n = 0; n <= n_max && rep.pass; ++n)
    for (int d = 0; d <= d_max && rep.pass; ++d)
      for (const Word& w : p.generators(n, d)) {
        ++checked;
        Tensor out = f.apply(n, g.apply(n, w));
        if (out != Tensor(p.field(), w)) {
          rep.fail(p.format(n, w), p.format(n, out), p.format(n, w));
          break;
        }
      }
  rep.detail = std::to_string(checked) + " free generators checked";
  return rep;
}

}  // namespace awez
