#include "awez/convert.hpp"

#include <set>

namespace awez {

namespace {

ChainMap renamed(std::string name, const ChainMap& f) {
  return ChainMap(std::move(name), f.source(), f.target(), [f](int n, const Word& w) { return f.apply(n, w); });
}

}  // namespace

CheckReport check_compatible(const CompatiblePair& pair, int n_max, int d_max, int a_max) {
  const Complex& c = pair.psi_R.source();
  const Complex& c2 = pair.psi_R.target();
  const Complex& d = pair.psi_S.source();
  const Complex& d2 = pair.psi_S.target();
  const Algebra& R = c.algebra();
  const Algebra& S = d.algebra();
  Field f = R.field();
  CheckReport rep;
  rep.name = "compatible " + pair.psi_R.name() + ", " + pair.psi_S.name();
  rep.instance = c.name() + " -> " + c2.name() + ", " + d.name() + " -> " + d2.name();
  rep.hdeg = n_max;
  rep.gdeg = d_max;
  long checked = 0;

  for (int n = 0; n <= n_max && rep.pass; ++n)
    for (const Word& w : c.basis_up_to(n, d_max)) {
      Tensor image = pair.psi_R.apply(n, w);
      for (int s : S.basis_up_to(a_max)) {
        ++checked;
        Tensor lhs(f);
        for (const auto& [u, cu] : pair.tau_C.apply(n, s, w)) {
          Word inner(u.begin(), u.end() - 1);
          for (const auto& [v, cv] : pair.psi_R.apply(n, inner)) {
            Word out = v;
            out.push_back(u.back());
            lhs.add(out, cu * cv);
          }
        }
        Tensor rhs(f);
        for (const auto& [v, cv] : image) rhs.add(pair.tau_C2.apply(n, s, v), cv);
        if (lhs != rhs) {
          auto fmt = [&](const Word& x) {
            return "(" + c2.format(n, Word(x.begin(), x.end() - 1)) + ") ⊗ " + S.format(x.back());
          };
          rep.fail(S.format(s) + " ⊗ (" + c.format(n, w) + ")", "(ψ⊗1)τ = " + format_combination(lhs, fmt),
                   "τ′(1⊗ψ) = " + format_combination(rhs, fmt));
          break;
        }
      }
      if (!rep.pass) break;
    }

  for (int n = 0; n <= n_max && rep.pass; ++n)
    for (const Word& w : d.basis_up_to(n, d_max)) {
      Tensor image = pair.psi_S.apply(n, w);
      for (int r : R.basis_up_to(a_max)) {
        ++checked;
        Tensor lhs(f);
        for (const auto& [u, cu] : pair.tau_D.apply(n, w, r)) {
          Word inner(u.begin() + 1, u.end());
          for (const auto& [v, cv] : pair.psi_S.apply(n, inner)) {
            Word out{u.front()};
            out.insert(out.end(), v.begin(), v.end());
            lhs.add(out, cu * cv);
          }
        }
        Tensor rhs(f);
        for (const auto& [v, cv] : image) rhs.add(pair.tau_D2.apply(n, v, r), cv);
        if (lhs != rhs) {
          auto fmt = [&](const Word& x) {
            return R.format(x.front()) + " ⊗ (" + d2.format(n, Word(x.begin() + 1, x.end())) + ")";
          };
          rep.fail("(" + d.format(n, w) + ") ⊗ " + R.format(r), "(1⊗ψ)τ = " + format_combination(lhs, fmt),
                   "τ′(ψ⊗1) = " + format_combination(rhs, fmt));
          break;
        }
      }
      if (!rep.pass) break;
    }
  rep.detail = std::to_string(checked) + " pairs checked";
  return rep;
}

ChainMap tensor_chain_maps(const ChainMap& psi_R, const ChainMap& psi_S, const TwistedProductComplex& x,
                           const TwistedProductComplex& x2) {
  return ChainMap(psi_R.name() + " ⊗ " + psi_S.name(), x, x2,
                  [psi_R, psi_S, &x, &x2](int n, const Word& w) {
                    int i;
                    Word c, d;
                    x.split(n, w, i, c, d);
                    Tensor out(x.field());
                    Tensor left = psi_R.apply(i, c);
                    if (left.is_zero()) return out;
                    Tensor right = psi_S.apply(n - i, d);
                    for (const auto& [u, cu] : left)
                      for (const auto& [v, cv] : right) out.add(x2.join(i, u, v), cu * cv);
                    return out;
                  });
}

BootstrapLift::BootstrapLift(ChainMap psi, std::string name)
    : psi_(std::move(psi)),
      map_(std::move(name), psi_.target(), psi_.source(), [this](int n, const Word& w) { return apply(n, w); }) {}

Tensor BootstrapLift::apply(int n, const Word& w) const {
  const Complex& p = psi_.source();
  const Complex& p2 = psi_.target();
  auto terms = p2.free_decomposition(n, w);
  if (!terms) throw NotLiftable(n, p2.degree(n, w), p2.name() + " has no free decomposition of its words");
  Tensor out(p.field());
  const Algebra& a = p.algebra();
  for (const FreeTerm& t : *terms)
    out += p.act(a.basis_element(t.left), on_generator(n, t.generator), a.basis_element(t.right), n);
  return out;
}

const Tensor& BootstrapLift::on_generator(int n, const Word& g) const {
  const Complex& p2 = psi_.target();
  std::pair<int, int> key{n, p2.degree(n, g)};
  if (!values_.count(key)) build_block(key.first, key.second);
  const auto& block = values_.at(key);
  auto it = block.find(g);
  if (it == block.end()) throw NotLiftable(key.first, key.second, p2.format(n, g) + " is not a free generator");
  return it->second;
}

void BootstrapLift::build_block(int n, int d) const {
  const Complex& p = psi_.source();
  const Complex& p2 = psi_.target();
  Field f = p.field();
  if (!p2.graded()) throw NotLiftable(n, d, "graded complements need a graded algebra");
  std::vector<Word> gens = p.generators(n, d);
  std::vector<Word> gens2 = p2.generators(n, d);
  std::map<Word, int> index;
  for (std::size_t k = 0; k < gens2.size(); ++k) index.emplace(gens2[k], static_cast<int>(k));

  Echelon ech(f);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    SparseVector v(f);
    for (const auto& [w, c] : psi_.apply(n, gens[i])) {
      auto it = index.find(w);
      if (it == index.end())
        throw NotLiftable(n, d, psi_.name() + "(" + p.format(n, gens[i]) + ") leaves the span of free generators");
      v.add(it->second, c);
    }
    if (!ech.insert(v, static_cast<int>(i)))
      throw NotLiftable(n, d, psi_.name() + " is not injective on free generators");
  }
  std::vector<int> pivots = ech.pivots();
  std::set<int> taken(pivots.begin(), pivots.end());
  std::vector<int> complement;
  for (int k = 0; k < static_cast<int>(gens2.size()); ++k)
    if (!taken.count(k)) complement.push_back(k);
  const int image = static_cast<int>(gens.size());
  std::vector<Tensor> lifted;
  for (std::size_t j = 0; j < complement.size(); ++j) {
    ech.insert(SparseVector(f, complement[j]), image + static_cast<int>(j));
    lifted.push_back(lift(n, d, gens2[static_cast<std::size_t>(complement[j])]));
  }

  std::map<Word, Tensor> values;
  for (std::size_t k = 0; k < gens2.size(); ++k) {
    auto coords = ech.express(SparseVector(f, static_cast<int>(k)));
    if (!coords) throw std::logic_error("bootstrap lift: generator outside image plus complement");
    Tensor v(f);
    for (const auto& [o, c] : *coords) {
      if (o < image)
        v.add(gens[static_cast<std::size_t>(o)], c);
      else
        v.add(lifted[static_cast<std::size_t>(o - image)], c);
    }
    values.emplace(gens2[k], std::move(v));
  }
  values_.emplace(std::make_pair(n, d), std::move(values));
  info_[{n, d}] = BlockInfo{image, static_cast<int>(complement.size())};
}

const BootstrapLift::Solver& BootstrapLift::solver(int n, int d) const {
  auto key = std::make_pair(n, d);
  auto it = solvers_.find(key);
  if (it != solvers_.end()) return it->second;
  const Complex& p = psi_.source();
  Field f = p.field();
  Solver s;
  s.words = p.basis(n, d);
  s.echelon = std::make_unique<Echelon>(f);
  for (std::size_t j = 0; j < s.words.size(); ++j) {
    SparseVector col(f);
    if (n == 0) {
      for (const auto& [a, c] : p.augmentation(s.words[j]))
        col.add(s.index.try_emplace(Word{a}, s.index.size()).first->second, c);
    } else {
      for (const auto& [w, c] : p.differential(n, s.words[j]))
        col.add(s.index.try_emplace(w, s.index.size()).first->second, c);
    }
    s.echelon->insert(col, static_cast<int>(j));
  }
  return solvers_.emplace(key, std::move(s)).first->second;
}

Tensor BootstrapLift::lift(int n, int d, const Word& c) const {
  const Complex& p = psi_.source();
  const Complex& p2 = psi_.target();
  Field f = p.field();
  // Target of d_n (or of epsilon when n = 0): psi'_{n-1} d'(c), with psi'_{-1} = 1.
  Tensor target(f);
  if (n == 0) {
    for (const auto& [a, coeff] : p2.augmentation(c)) target.add(Word{a}, coeff);
  } else {
    for (const auto& [w, coeff] : p2.differential(n, c)) target.add(apply(n - 1, w), coeff);
  }
  const Solver& s = solver(n, d);
  SparseVector b(f);
  for (const auto& [w, coeff] : target) {
    auto it = s.index.find(w);
    if (it == s.index.end()) throw std::logic_error("bootstrap lift: inconsistent system at " + p2.format(n, c));
    b.add(it->second, coeff);
  }
  auto x = s.echelon->express(b);
  if (!x) throw std::logic_error("bootstrap lift: inconsistent system at " + p2.format(n, c));
  Tensor out(f);
  for (const auto& [j, coeff] : *x) out.add(s.words[static_cast<std::size_t>(j)], coeff);
  return out;
}

Conversion conversion_pi_iota(const AwEz& maps, const TwistedProductComplex& x, const ChainMap& pi_R,
                              const ChainMap& iota_R, const ChainMap& pi_S, const ChainMap& iota_S) {
  const TwistedProductComplex& xbar = maps.product(true);
  ChainMap pis = tensor_chain_maps(pi_R, pi_S, xbar, x);
  ChainMap iotas = tensor_chain_maps(iota_R, iota_S, x, xbar);
  return {renamed("π", compose(pis, maps.aw_map())), renamed("ι", compose(maps.ez_map(), iotas))};
}

LiftedConversion conversion_by_lifting(const AwEz& maps, const TwistedProductComplex& x, const ChainMap& iota_R,
                                       const ChainMap& iota_S) {
  ChainMap iota = renamed("ι", compose(maps.ez_map(), tensor_chain_maps(iota_R, iota_S, x, maps.product(true))));
  auto lift = std::make_unique<BootstrapLift>(iota, "π");
  return {std::move(iota), std::move(lift)};
}

ChainMap koszul_inclusion(const KoszulComplex& k, const BarComplex& bar) {
  return ChainMap("ι_R", k, bar, [&k](int n, const Word& w) { return k.include_in_bar(n, w); });
}

ChainMap one_variable_koszul_projection(const BarComplex& bar, const KoszulComplex& k) {
  const Algebra& r = k.algebra();
  if (r.generators().size() != 1)
    throw ConversionError("one generator", "the closed projection B̄ -> K needs R = k[x]");
  return ChainMap("π_R", bar, k, [&r](int n, const Word& w) {
    Field f = r.field();
    Tensor out(f);
    if (n == 0) {
      out.add(Word{w[0], 0, w[1]}, Scalar::one(f));
    } else if (n == 1) {
      int a = r.degree(w[1]);
      for (int i = 0; i < a; ++i)
        for (const auto& [p, cp] : r.multiply(w[0], r.graded_basis(i).front()))
          for (const auto& [q, cq] : r.multiply(r.graded_basis(a - 1 - i).front(), w[2]))
            out.add(Word{p, 0, q}, cp * cq);
    }
    return out;
  });
}

SmashKoszulPipeline::SmashKoszulPipeline(const TwistedProductAlgebra& a, const HopfAction& action, int max_degree)
    : a_(a),
      maps_(a, max_degree),
      k_(a.R(), max_degree),
      tau_k_(action, k_),
      tau_bar_R_(a.twist(), true),
      tau_bar_H_(a.twist(), true),
      x_(a, k_, maps_.bar_S(true), tau_k_, tau_bar_H_, "K ⊗τ B̄_H"),
      iota_R_(koszul_inclusion(k_, maps_.bar_R(true))),
      iota_H_(identity_map(maps_.bar_S(true))),
      iota_(renamed("ι", compose(maps_.ez_map(), tensor_chain_maps(iota_R_, iota_H_, x_, maps_.product(true))))),
      lift_(std::make_unique<BootstrapLift>(iota_, "π")),
      pi_RH_(renamed("π_{R,H}", compose(lift_->map(), maps_.ez_map()))) {
  check_koszul_admissible(action, k_);
}

CompatiblePair SmashKoszulPipeline::compatibility() const {
  return CompatiblePair{iota_R_, iota_H_, tau_k_, tau_bar_R_, tau_bar_H_, tau_bar_H_};
}

}  // namespace awez
