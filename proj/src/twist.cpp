#include "awez/twist.hpp"

#include <algorithm>

namespace awez {

// --- TwistingMap -----------------------------------------------------------

Tensor TwistingMap::apply(int s, int r) const {
  std::pair<int, int> key{s, r};
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  Tensor v = compute(s, r);
  std::lock_guard<std::mutex> lock(mutex_);
  cache_.emplace(key, v);
  return v;
}

Tensor TwistingMap::apply(const Tensor& sr) const {
  Tensor out(field());
  for (const auto& [w, c] : sr) out.add(apply(w[0], w[1]), c);
  return out;
}

Tensor TwistingMap::apply_inverse(int r, int s) const {
  if (auto closed = closed_inverse(r, s)) return *closed;
  return linear_inverse(r, s);
}

Tensor TwistingMap::apply_inverse(const Tensor& rs) const {
  Tensor out(field());
  for (const auto& [w, c] : rs) out.add(apply_inverse(w[0], w[1]), c);
  return out;
}

Tensor TwistingMap::linear_inverse(int r, int s) const {
  std::pair<int, int> key{r, s};
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = inverse_cache_.find(key);
    if (it != inverse_cache_.end()) return it->second;
  }
  invert_block(r, s);
  std::lock_guard<std::mutex> lock(mutex_);
  return inverse_cache_.at(key);
}

void TwistingMap::invert_block(int r, int s) const {
  int dr = r_.degree(r);
  int ds = s_.degree(s);
  // Domain pairs {s', r'} and target pairs {r'', s''} of the block.
  std::vector<std::pair<int, int>> domain;
  std::map<std::pair<int, int>, int> target_index;
  std::vector<std::pair<int, int>> targets;
  auto add_target = [&](int rr, int ss) {
    target_index.emplace(std::make_pair(rr, ss), static_cast<int>(targets.size()));
    targets.emplace_back(rr, ss);
  };
  if (strongly_graded_) {
    for (int ss : s_.graded_basis(ds))
      for (int rr : r_.graded_basis(dr)) domain.emplace_back(ss, rr);
    for (int rr : r_.graded_basis(dr))
      for (int ss : s_.graded_basis(ds)) add_target(rr, ss);
  } else {
    int d = dr + ds;
    for (int ss : s_.basis_up_to(d))
      for (int rr : r_.basis_up_to(d - s_.degree(ss))) domain.emplace_back(ss, rr);
    for (int rr : r_.basis_up_to(d))
      for (int ss : s_.basis_up_to(d - r_.degree(rr))) add_target(rr, ss);
  }
  Echelon e(field());
  for (std::size_t j = 0; j < domain.size(); ++j) {
    SparseVector col(field());
    for (const auto& [w, c] : apply(domain[j].first, domain[j].second)) {
      auto it = target_index.find({w[0], w[1]});
      if (it == target_index.end()) throw NotInvertible(dr, ds);
      col.add(it->second, c);
    }
    e.insert(col, static_cast<int>(j));
  }
  std::map<std::pair<int, int>, Tensor> found;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    SparseVector unit_vec(field());
    unit_vec.add(static_cast<int>(t), Scalar::one(field()));
    auto combo = e.express(unit_vec);
    if (!combo) throw NotInvertible(r_.degree(targets[t].first), s_.degree(targets[t].second));
    Tensor v(field());
    for (const auto& [j, c] : *combo) v.add(Word{domain[j].first, domain[j].second}, c);
    found.emplace(targets[t], std::move(v));
  }
  std::lock_guard<std::mutex> lock(mutex_);
  for (auto& [k, v] : found) inverse_cache_.emplace(k, std::move(v));
}

std::string TwistingMap::format_rs(const Tensor& rs) const {
  return format_combination(rs, [this](const Word& w) { return r_.format(w[0]) + "⊗" + s_.format(w[1]); });
}

std::string TwistingMap::format_sr(const Tensor& sr) const {
  return format_combination(sr, [this](const Word& w) { return s_.format(w[0]) + "⊗" + r_.format(w[1]); });
}

// --- GeneratorTwist --------------------------------------------------------

namespace {

bool rules_preserve_bidegree(const Algebra& r, const Algebra& s,
                             const std::map<std::pair<int, int>, Tensor>& rules) {
  for (const auto& [key, val] : rules)
    for (const auto& [w, c] : val)
      if (r.degree(w[0]) != r.degree(key.second) || s.degree(w[1]) != s.degree(key.first)) return false;
  return true;
}

}  // namespace

GeneratorTwist::GeneratorTwist(const Algebra& r, const Algebra& s,
                               std::map<std::pair<int, int>, Tensor> rules)
    : TwistingMap(r, s, rules_preserve_bidegree(r, s, rules)), rules_(std::move(rules)) {}

Tensor GeneratorTwist::compute(int s, int r) const {
  Field f = field();
  if (s == Algebra::unit() || r == Algebra::unit()) return Tensor(f, Word{r, s});
  if (auto sp = S().split_left(s); sp && sp->second != Algebra::unit()) {
    // tau(a s' (x) r) = (1 (x) m)(tau (x) 1)(1 (x) tau)(a (x) s' (x) r)
    auto [a, rest] = *sp;
    Tensor out(f);
    for (const auto& [w1, c1] : apply(rest, r))
      for (const auto& [w2, c2] : apply(a, w1[0]))
        for (const auto& [s3, c3] : S().multiply(w2[1], w1[1])) out.add(Word{w2[0], s3}, c1 * c2 * c3);
    return out;
  }
  if (auto rp = R().split_left(r); rp && rp->second != Algebra::unit()) {
    // tau(s (x) b r') = (m (x) 1)(1 (x) tau)(tau (x) 1)(s (x) b (x) r')
    auto [b, rest] = *rp;
    Tensor out(f);
    for (const auto& [w1, c1] : apply(s, b))
      for (const auto& [w2, c2] : apply(w1[1], rest))
        for (const auto& [r3, c3] : R().multiply(w1[0], w2[0])) out.add(Word{r3, w2[1]}, c1 * c2 * c3);
    return out;
  }
  auto it = rules_.find({s, r});
  if (it == rules_.end())
    throw std::invalid_argument("no twist rule for " + S().format(s) + "⊗" + R().format(r));
  return it->second;
}

std::map<std::pair<int, int>, Tensor> parse_generator_rules(
    const Algebra& r, const Algebra& s, const std::vector<std::array<std::string, 3>>& rules) {
  Field f = r.field();
  std::map<std::pair<int, int>, Tensor> out;
  for (const auto& [stext, rtext, rhs] : rules) {
    int sg = s.parse_basis(stext);
    int rg = r.parse_basis(rtext);
    // Each term c*u*v: the leading R-atoms form u, the rest v. We parse by
    // splitting at '*' and classifying each factor by the algebra it parses in.
    Tensor val(f);
    std::string text = rhs;
    std::size_t pos = 0;
    Scalar sign = Scalar::one(f);
    auto trim = [](std::string t) {
      while (!t.empty() && t.front() == ' ') t.erase(0, 1);
      while (!t.empty() && t.back() == ' ') t.pop_back();
      return t;
    };
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
      if (text[0] == '-') sign = -sign;
      pos = 1;
    }
    for (;;) {
      std::size_t next = text.find_first_of("+-", pos);
      std::string term = trim(text.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
      if (term != "0") {
        Scalar c = sign;
        Element ru(f, Algebra::unit());
        Element sv(f, Algebra::unit());
        std::size_t tp = 0;
        for (;;) {
          std::size_t star = term.find('*', tp);
          std::string factor = trim(term.substr(tp, star == std::string::npos ? std::string::npos : star - tp));
          if (factor.empty()) throw ParseError("empty factor in twist rule '" + rhs + "'");
          if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
            c *= Scalar::parse(f, factor);
          } else if (factor != "1") {
            bool in_r = true;
            Element e;
            try {
              e = r.parse(factor);
            } catch (const ParseError&) {
              in_r = false;
              e = s.parse(factor);
            }
            if (in_r)
              ru = r.multiply(ru, e);
            else
              sv = s.multiply(sv, e);
          }
          if (star == std::string::npos) break;
          tp = star + 1;
        }
        for (const auto& [a, ca] : ru)
          for (const auto& [b, cb] : sv) val.add(Word{a, b}, c * ca * cb);
      }
      if (next == std::string::npos) break;
      sign = text[next] == '-' ? -Scalar::one(f) : Scalar::one(f);
      pos = next + 1;
    }
    out[{sg, rg}] = val;
  }
  return out;
}

std::unique_ptr<TwistingMap> extend_twist_from_generators(
    const Algebra& r, const Algebra& s, std::map<std::pair<int, int>, Tensor> rules, int budget) {
  auto tau = std::make_unique<GeneratorTwist>(r, s, std::move(rules));
  CheckReport rep = check_twist_axiom(*tau, budget);
  if (!rep.pass) throw TwistInconsistent("generator rules do not extend to a twisting map: hexagon fails at " +
                                             rep.witness,
                                         rep.witness);
  return tau;
}

Tensor OverrideTwist::compute(int s, int r) const {
  auto it = overrides_.find({s, r});
  if (it != overrides_.end()) return it->second;
  return base_.apply(s, r);
}

// --- Hopf structures -------------------------------------------------------

CheckReport check_hopf_axioms(const HopfAlgebra& hopf) {
  const Algebra& h = hopf.algebra();
  Field f = h.field();
  CheckReport rep;
  rep.name = "hopf-axioms";
  auto fmt3 = [&](const Tensor& t) {
    return format_combination(t, [&](const Word& w) {
      std::string s;
      for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "⊗" : "") + h.format(w[i]);
      return s;
    });
  };
  for (int x = 0; x < h.size() && rep.pass; ++x) {
    Tensor d = hopf.coproduct(x);
    Tensor left(f), right(f);
    for (const auto& [w, c] : d) {
      for (const auto& [w2, c2] : hopf.coproduct(w[0])) left.add(Word{w2[0], w2[1], w[1]}, c * c2);
      for (const auto& [w2, c2] : hopf.coproduct(w[1])) right.add(Word{w[0], w2[0], w2[1]}, c * c2);
    }
    if (left != right) rep.fail("coassociativity at " + h.format(x), fmt3(left), fmt3(right));
    Element cl(f), cr(f), al(f), ar(f);
    for (const auto& [w, c] : d) {
      cl.add(w[1], c * hopf.counit(w[0]));
      cr.add(w[0], c * hopf.counit(w[1]));
      al += c * h.multiply(hopf.antipode(w[0]), h.basis_element(w[1]));
      ar += c * h.multiply(h.basis_element(w[0]), hopf.antipode(w[1]));
    }
    Element xe = h.basis_element(x);
    Element eps(f);
    eps.add(Algebra::unit(), hopf.counit(x));
    if (cl != xe || cr != xe) rep.fail("counit law at " + h.format(x), h.format(cl), h.format(cr));
    if (al != eps || ar != eps) rep.fail("antipode law at " + h.format(x), h.format(al), h.format(ar));
    Element back(f);
    for (const auto& [y, c] : hopf.antipode(x)) back.add(hopf.antipode_inverse(y), c);
    if (back != xe) rep.fail("antipode inverse at " + h.format(x), h.format(back), h.format(xe));
    for (int y = 0; y < h.size() && rep.pass; ++y) {
      Tensor lhs(f), rhs(f);
      for (const auto& [z, c] : h.multiply(x, y)) lhs.add(hopf.coproduct(z), c);
      for (const auto& [w1, c1] : hopf.coproduct(x))
        for (const auto& [w2, c2] : hopf.coproduct(y))
          for (const auto& [a, ca] : h.multiply(w1[0], w2[0]))
            for (const auto& [b, cb] : h.multiply(w1[1], w2[1])) rhs.add(Word{a, b}, c1 * c2 * ca * cb);
      if (lhs != rhs) rep.fail("coproduct multiplicativity at " + h.format(x) + ", " + h.format(y), fmt3(lhs), fmt3(rhs));
    }
  }
  return rep;
}

Element HopfAction::act(int h, const Element& r) const {
  Element out(r_.field());
  for (const auto& [x, c] : r) out.add(act(h, x), c);
  return out;
}

Element HopfAction::act(const Element& h, const Element& r) const {
  Element out(r_.field());
  for (const auto& [g, c] : h) out.add(act(g, r), c);
  return out;
}

GroupAction::GroupAction(const GroupHopfAlgebra& h, const Algebra& r,
                         std::vector<std::vector<Element>> generator_images)
    : HopfAction(h, r), group_(h), images_(std::move(generator_images)) {
  if (images_.size() != h.algebra().generators().size())
    throw std::invalid_argument("group action needs images for every group generator");
  for (const auto& im : images_)
    if (im.size() != r.generators().size())
      throw std::invalid_argument("group action needs an image for every algebra generator");
}

Element GroupAction::act(int g, int r) const {
  Field f = module().field();
  if (g == Algebra::unit()) return Element(f, r);
  if (r == Algebra::unit()) return Element(f, Algebra::unit());
  std::pair<int, int> key{g, r};
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  const Algebra& kg = hopf().algebra();
  auto [t, gp] = *kg.split_left(g);
  Element out(f);
  if (gp != Algebra::unit()) {
    out = HopfAction::act(t, act(gp, r));
  } else {
    auto [a, rest] = *module().split_left(r);
    if (rest == Algebra::unit()) {
      const auto& gens = kg.generators();
      const auto& rg = module().generators();
      auto ti = std::find(gens.begin(), gens.end(), t) - gens.begin();
      auto ai = std::find(rg.begin(), rg.end(), a) - rg.begin();
      out = images_.at(static_cast<std::size_t>(ti)).at(static_cast<std::size_t>(ai));
    } else {
      out = module().multiply(act(t, a), act(t, rest));
    }
  }
  std::lock_guard<std::mutex> lock(mutex_);
  cache_.emplace(key, out);
  return out;
}

CheckReport check_action_axioms(const HopfAction& a, int budget) {
  const Algebra& h = a.hopf().algebra();
  const Algebra& r = a.module();
  Field f = r.field();
  CheckReport rep;
  rep.name = "hopf-action-axioms";
  rep.gdeg = budget;
  std::vector<int> rb = r.basis_up_to(budget);
  for (int x = 0; x < h.size() && rep.pass; ++x) {
    Element one = a.act(x, Algebra::unit());
    Element eps(f);
    eps.add(Algebra::unit(), a.hopf().counit(x));
    if (one != eps) rep.fail("^" + h.format(x) + "1", r.format(one), r.format(eps));
    for (int u : rb) {
      Element v = a.act(x, u);
      for (const auto& [w, c] : v)
        if (r.degree(w) != r.degree(u))
          rep.fail("grading of ^" + h.format(x) + r.format(u), r.format(v), "degree " + std::to_string(r.degree(u)));
      for (int y = 0; y < h.size() && rep.pass; ++y) {
        Element lhs = a.act(h.multiply(x, y), Element(f, u));
        Element rhs = a.act(x, a.act(y, u));
        if (lhs != rhs)
          rep.fail("^(" + h.format(x) + "·" + h.format(y) + ")" + r.format(u), r.format(lhs), r.format(rhs));
      }
      for (int u2 : rb) {
        if (r.degree(u) + r.degree(u2) > budget || !rep.pass) continue;
        Element lhs = a.act(x, r.multiply(u, u2));
        Element rhs(f);
        for (const auto& [w, c] : a.hopf().coproduct(x)) rhs += c * r.multiply(a.act(w[0], u), a.act(w[1], u2));
        if (lhs != rhs)
          rep.fail("^" + h.format(x) + "(" + r.format(u) + "·" + r.format(u2) + ")", r.format(lhs), r.format(rhs));
      }
    }
  }
  return rep;
}

Tensor HopfSmashTwist::compute(int h, int r) const {
  Tensor out(field());
  for (const auto& [w, c] : action_.hopf().coproduct(h))
    for (const auto& [rr, cr] : action_.act(w[0], r)) out.add(Word{rr, w[1]}, c * cr);
  return out;
}

std::optional<Tensor> HopfSmashTwist::closed_inverse(int r, int h) const {
  Tensor out(field());
  const HopfAlgebra& hopf = action_.hopf();
  for (const auto& [w, c] : hopf.coproduct(h))
    for (const auto& [g, cg] : hopf.antipode_inverse(w[0]))
      for (const auto& [rr, cr] : action_.act(g, r)) out.add(Word{w[1], rr}, c * cg * cr);
  return out;
}

// --- Axiom checks ----------------------------------------------------------

CheckReport check_twist_axiom(const TwistingMap& tau, int budget) {
  const Algebra& R = tau.R();
  const Algebra& S = tau.S();
  Field f = tau.field();
  CheckReport rep;
  rep.name = "twist-hexagon";
  rep.gdeg = budget;
  for (int r : R.basis_up_to(budget)) {
    Tensor v = tau.apply(Algebra::unit(), r);
    if (v != Tensor(f, Word{r, Algebra::unit()})) {
      rep.fail("(1, " + R.format(r) + ")", tau.format_rs(v), R.format(r) + "⊗1");
      return rep;
    }
  }
  for (int s : S.basis_up_to(budget)) {
    Tensor v = tau.apply(s, Algebra::unit());
    if (v != Tensor(f, Word{Algebra::unit(), s})) {
      rep.fail("(" + S.format(s) + ", 1)", tau.format_rs(v), "1⊗" + S.format(s));
      return rep;
    }
  }
  long count = 0;
  for (int total = 0; total <= budget; ++total) {
    for (int s : S.basis_up_to(total)) {
      for (int s2 : S.basis_up_to(total - S.degree(s))) {
        int left = total - S.degree(s) - S.degree(s2);
        for (int r : R.basis_up_to(left)) {
          for (int r2 : R.graded_basis(left - R.degree(r))) {
            ++count;
            Tensor lhs(f);
            Element ss = S.multiply(s, s2);
            Element rr = R.multiply(r, r2);
            for (const auto& [a, ca] : ss)
              for (const auto& [b, cb] : rr) lhs.add(tau.apply(a, b), ca * cb);
            Tensor rhs(f);
            for (const auto& [w1, c1] : tau.apply(s2, r))          // (1 τ 1)
              for (const auto& [w2, c2] : tau.apply(s, w1[0]))     // τ on (s, r1)
                for (const auto& [w3, c3] : tau.apply(w1[1], r2))  // τ on (s1, r')
                  for (const auto& [w4, c4] : tau.apply(w2[1], w3[0]))
                    for (const auto& [ra, ka] : R.multiply(w2[0], w4[0]))
                      for (const auto& [sb, kb] : S.multiply(w4[1], w3[1]))
                        rhs.add(Word{ra, sb}, c1 * c2 * c3 * c4 * ka * kb);
            if (lhs != rhs) {
              rep.fail("(" + S.format(s) + ", " + S.format(s2) + ", " + R.format(r) + ", " + R.format(r2) + ")",
                       tau.format_rs(lhs), tau.format_rs(rhs));
              rep.detail = std::to_string(count) + " quadruples checked";
              return rep;
            }
          }
        }
      }
    }
  }
  rep.detail = std::to_string(count) + " quadruples checked";
  return rep;
}

CheckReport check_twist_inverse(const TwistingMap& tau, int budget) {
  const Algebra& R = tau.R();
  const Algebra& S = tau.S();
  Field f = tau.field();
  CheckReport rep;
  rep.name = "twist-inverse";
  rep.gdeg = budget;
  long count = 0;
  for (int s : S.basis_up_to(budget)) {
    for (int r : R.basis_up_to(budget - S.degree(s))) {
      ++count;
      Tensor back = tau.apply_inverse(tau.apply(s, r));
      Tensor sr(f, Word{s, r});
      if (back != sr) {
        rep.fail("τ⁻¹τ(" + S.format(s) + "⊗" + R.format(r) + ")", tau.format_sr(back), tau.format_sr(sr));
        return rep;
      }
      Tensor rs(f, Word{r, s});
      Tensor fwd = tau.apply(tau.apply_inverse(r, s));
      if (fwd != rs) {
        rep.fail("ττ⁻¹(" + R.format(r) + "⊗" + S.format(s) + ")", tau.format_rs(fwd), tau.format_rs(rs));
        return rep;
      }
      if (tau.has_closed_inverse()) {
        Tensor closed = tau.apply_inverse(r, s);
        Tensor lin = tau.linear_inverse(r, s);
        if (closed != lin) {
          rep.fail("closed vs linear τ⁻¹(" + R.format(r) + "⊗" + S.format(s) + ")", tau.format_sr(closed),
                   tau.format_sr(lin));
          return rep;
        }
      }
    }
  }
  rep.detail = std::to_string(count) + " pairs checked";
  return rep;
}

// --- TwistedProductAlgebra -------------------------------------------------

TwistedProductAlgebra::TwistedProductAlgebra(const TwistingMap& tau, std::string name)
    : Algebra(tau.field(), name.empty() ? tau.R().name() + "⊗τ" + tau.S().name() : name,
              std::max(tau.R().budget(), tau.S().budget())),
      tau_(tau) {
  const Algebra& R = tau.R();
  const Algebra& S = tau.S();
  for (int d = 0; d <= budget(); ++d)
    for (int r : R.basis_up_to(d))
      for (int s : S.graded_basis(d - R.degree(r))) {
        index_[{r, s}] = add_basis(d);
        pairs_.emplace_back(r, s);
      }
  set_graded(tau.strongly_graded());
  std::vector<int> gens;
  for (int g : R.generators()) gens.push_back(id(g, Algebra::unit()));
  for (int g : S.generators()) gens.push_back(id(Algebra::unit(), g));
  set_generators(std::move(gens));
}

int TwistedProductAlgebra::id(int r, int s) const {
  auto it = index_.find({r, s});
  if (it == index_.end()) throw BudgetExceeded(name(), R().degree(r) + S().degree(s));
  return it->second;
}

Element TwistedProductAlgebra::from_pairs(const Tensor& rs) const {
  Element out(field());
  for (const auto& [w, c] : rs) out.add(id(w[0], w[1]), c);
  return out;
}

std::optional<std::vector<SparseVector>> TwistedProductAlgebra::quadratic_relations() const {
  auto rr = R().quadratic_relations();
  auto rs = S().quadratic_relations();
  if (!rr || !rs) return std::nullopt;
  const auto& gr = R().generators();
  const auto& gs = S().generators();
  int mr = static_cast<int>(gr.size());
  int ms = static_cast<int>(gs.size());
  int m = mr + ms;
  auto position = [](const std::vector<int>& gens, int id) {
    auto it = std::find(gens.begin(), gens.end(), id);
    return it == gens.end() ? -1 : static_cast<int>(it - gens.begin());
  };
  std::vector<SparseVector> out;
  for (const auto& v : *rr) {
    SparseVector w(field());
    for (const auto& [idx, c] : v) w.add((idx / mr) * m + idx % mr, c);
    out.push_back(w);
  }
  for (const auto& v : *rs) {
    SparseVector w(field());
    for (const auto& [idx, c] : v) w.add((mr + idx / ms) * m + mr + idx % ms, c);
    out.push_back(w);
  }
  for (int j = 0; j < ms; ++j)
    for (int i = 0; i < mr; ++i) {
      SparseVector w(field());
      w.add((mr + j) * m + i, Scalar::one(field()));
      for (const auto& [v, c] : tau_.apply(gs[j], gr[i])) {
        int a = position(gr, v[0]);
        int b = position(gs, v[1]);
        if (a < 0 || b < 0) return std::nullopt;
        w.add(a * m + mr + b, -c);
      }
      out.push_back(w);
    }
  return out;
}

Element TwistedProductAlgebra::multiply(int a, int b) const {
  std::pair<int, int> key{a, b};
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  auto [r, s] = pair(a);
  auto [r2, s2] = pair(b);
  Element out(field());
  for (const auto& [w, c] : tau_.apply(s, r2))
    for (const auto& [ra, ca] : R().multiply(r, w[0]))
      for (const auto& [sb, cb] : S().multiply(w[1], s2)) out.add(id(ra, sb), c * ca * cb);
  std::lock_guard<std::mutex> lock(mutex_);
  cache_.emplace(key, out);
  return out;
}

std::string TwistedProductAlgebra::format(int id) const {
  auto [r, s] = pair(id);
  if (s == Algebra::unit()) return R().format(r);
  if (r == Algebra::unit()) return S().format(s);
  return R().format(r) + "*" + S().format(s);
}

std::optional<std::pair<int, int>> TwistedProductAlgebra::split_left(int x) const {
  auto [r, s] = pair(x);
  if (r != Algebra::unit()) {
    auto [a, rest] = *R().split_left(r);
    return std::make_pair(id(a, Algebra::unit()), id(rest, s));
  }
  if (s != Algebra::unit()) {
    auto sp = S().split_left(s);
    if (!sp) return std::nullopt;
    return std::make_pair(id(Algebra::unit(), sp->first), id(Algebra::unit(), sp->second));
  }
  return std::nullopt;
}

Element TwistedProductAlgebra::atom(std::string_view n) const {
  Element out(field());
  try {
    for (const auto& [r, c] : R().parse(n)) out.add(id(r, Algebra::unit()), c);
    return out;
  } catch (const ParseError&) {
  }
  for (const auto& [s, c] : S().parse(n)) out.add(id(Algebra::unit(), s), c);
  return out;
}

// --- Iterated twists -------------------------------------------------------

Tensor twist_through_R(const TwistingMap& tau, int s, const Word& rword, bool reduced) {
  Field f = tau.field();
  Tensor state(f, Word{s});
  std::size_t last = rword.size() - 1;
  for (std::size_t j = 0; j < rword.size(); ++j) {
    Tensor next(f);
    for (const auto& [w, c] : state) {
      for (const auto& [v, cv] : tau.apply(w.back(), rword[j])) {
        if (reduced && j > 0 && j < last && v[0] == Algebra::unit()) continue;
        Word nw(w.begin(), w.end() - 1);
        nw.push_back(v[0]);
        nw.push_back(v[1]);
        next.add(nw, c * cv);
      }
    }
    state = std::move(next);
  }
  return state;
}

Tensor twist_through_S(const TwistingMap& tau, const Word& sword, int r, bool reduced) {
  Field f = tau.field();
  // State words hold {r', s_{j}, ..., s_{n+1}}.
  Tensor state(f, Word{r});
  std::size_t last = sword.size() - 1;
  for (std::size_t j = sword.size(); j-- > 0;) {
    Tensor next(f);
    for (const auto& [w, c] : state) {
      for (const auto& [v, cv] : tau.apply(sword[j], w[0])) {
        if (reduced && j > 0 && j < last && v[1] == Algebra::unit()) continue;
        Word nw;
        nw.reserve(w.size() + 1);
        nw.push_back(v[0]);
        nw.push_back(v[1]);
        nw.insert(nw.end(), w.begin() + 1, w.end());
        next.add(nw, c * cv);
      }
    }
    state = std::move(next);
  }
  return state;
}

}  // namespace awez
