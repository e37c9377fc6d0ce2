#include "awez/resolutions.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "awez/linalg.hpp"

namespace awez {

namespace {

std::string join_slots(const Algebra& a, Word::const_iterator b, Word::const_iterator e) {
  std::string out;
  for (auto it = b; it != e; ++it) {
    if (it != b) out += " ⊗ ";
    out += a.format(*it);
  }
  return out;
}

int power(int base, int e) {
  int out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

// Expands the product of two combinations slot-wise into words a ++ b.
Tensor concat(const Tensor& x, const Tensor& y) {
  Tensor out(x.field());
  for (const auto& [u, cu] : x)
    for (const auto& [v, cv] : y) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add(w, cu * cv);
    }
  return out;
}

}  // namespace

// --- BarComplex

BarComplex::BarComplex(const Algebra& a, bool reduced, int max_degree, std::string name)
    : a_(a), reduced_(reduced), max_degree_(max_degree), name_(std::move(name)) {
  if (name_.empty()) name_ = std::string(reduced ? "reduced bar" : "bar") + " resolution of " + a.name();
}

int BarComplex::degree(int, const Word& w) const {
  int d = 0;
  for (int x : w) d += a_.degree(x);
  return d;
}

Tensor BarComplex::differential(int n, const Word& w) const {
  Tensor out(a_.field());
  Scalar sign = Scalar::one(a_.field());
  for (int i = 0; i <= n; ++i) {
    for (const auto& [p, c] : a_.multiply(w[i], w[i + 1])) {
      // After merging, the letter at position i is inner when 1 <= i <= n - 1.
      if (reduced_ && i >= 1 && i <= n - 1 && p == Algebra::unit()) continue;
      Word nw(w.begin(), w.begin() + i);
      nw.push_back(p);
      nw.insert(nw.end(), w.begin() + i + 2, w.end());
      out.add(nw, sign * c);
    }
    sign = -sign;
  }
  return out;
}

Element BarComplex::augmentation(const Word& w) const { return a_.multiply(w[0], w[1]); }

Tensor BarComplex::act(int a, const Word& w, int b, int) const {
  Tensor out(a_.field());
  for (const auto& [p, cp] : a_.multiply(a, w.front()))
    for (const auto& [q, cq] : a_.multiply(w.back(), b)) {
      Word nw = w;
      nw.front() = p;
      nw.back() = q;
      out.add(nw, cp * cq);
    }
  return out;
}

std::vector<Word> BarComplex::basis(int n, int d) const {
  std::vector<bool> mask(static_cast<std::size_t>(n + 2), false);
  if (reduced_)
    for (int i = 1; i <= n; ++i) mask[i] = true;
  return enumerate_words(a_, mask.size(), d, mask);
}

std::vector<Word> BarComplex::generators(int n, int d) const {
  std::vector<bool> mask(static_cast<std::size_t>(n), reduced_);
  std::vector<Word> out;
  for (Word inner : enumerate_words(a_, mask.size(), d, mask)) {
    inner.insert(inner.begin(), Algebra::unit());
    inner.push_back(Algebra::unit());
    out.push_back(std::move(inner));
  }
  return out;
}

std::string BarComplex::format(int, const Word& w) const { return join_slots(a_, w.begin(), w.end()); }

std::optional<std::vector<FreeTerm>> BarComplex::free_decomposition(int, const Word& w) const {
  Word g = w;
  g.front() = Algebra::unit();
  g.back() = Algebra::unit();
  return std::vector<FreeTerm>{{w.front(), g, w.back()}};
}

Tensor BarComplex::project(const Tensor& t) const {
  Tensor out(t.field());
  for (const auto& [w, c] : t) {
    bool keep = true;
    for (std::size_t i = 1; i + 1 < w.size(); ++i) keep = keep && w[i] != Algebra::unit();
    if (keep) out.add(w, c);
  }
  return out;
}

// --- KoszulComplex

KoszulComplex::KoszulComplex(const Algebra& r, int max_degree, std::string name)
    : r_(r), max_degree_(max_degree), name_(std::move(name)) {
  if (name_.empty()) name_ = "Koszul resolution of " + r.name();
  auto rel = r.quadratic_relations();
  if (!rel) throw std::invalid_argument(r.name() + " has no quadratic presentation");
  Field f = r.field();
  m_ = static_cast<int>(r.generators().size());
  std::vector<SparseVector> relations = rref(f, *rel);

  ktilde_.push_back({SparseVector(f, 0)});
  if (max_degree_ >= 1) {
    std::vector<SparseVector> v;
    for (int j = 0; j < m_; ++j) v.emplace_back(f, j);
    ktilde_.push_back(v);
  }
  for (int n = 2; n <= max_degree_; ++n) {
    std::vector<std::vector<SparseVector>> spaces;
    for (int j = 0; j + 2 <= n; ++j) {
      int pre = power(m_, j);
      int post = power(m_, n - 2 - j);
      std::vector<SparseVector> span;
      for (const auto& rv : relations)
        for (int a = 0; a < pre; ++a)
          for (int b = 0; b < post; ++b) {
            SparseVector v(f);
            for (const auto& [idx, c] : rv) v.add((a * m_ * m_ + idx) * post + b, c);
            span.push_back(v);
          }
      spaces.push_back(std::move(span));
    }
    ktilde_.push_back(subspace_intersection(f, spaces));
  }

  left_.resize(ktilde_.size());
  right_.resize(ktilde_.size());
  for (int n = 1; n < static_cast<int>(ktilde_.size()); ++n) {
    int low = power(m_, n - 1);
    for (const auto& b : ktilde_[n]) {
      std::map<int, SparseVector> lrest, rrest;
      for (const auto& [idx, c] : b) {
        lrest.try_emplace(idx / low, f).first->second.add(idx % low, c);
        rrest.try_emplace(idx % m_, f).first->second.add(idx / m_, c);
      }
      auto splits = [&](const std::map<int, SparseVector>& rest) {
        std::vector<Split> out;
        for (const auto& [t, v] : rest) {
          auto coords = coordinates(n - 1, v);
          if (!coords) throw std::logic_error("Koszul space is not closed under deletion of a letter");
          out.push_back({t, *coords});
        }
        return out;
      };
      left_[n].push_back(splits(lrest));
      right_[n].push_back(splits(rrest));
    }
  }
}

std::optional<SparseVector> KoszulComplex::coordinates(int n, const SparseVector& v) const {
  const auto& rows = ktilde(n);
  Field f = r_.field();
  SparseVector coords(f), rebuilt(f);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Scalar c = v.coeff(rows[i].begin()->first);
    coords.add(static_cast<int>(i), c);
    rebuilt.add(rows[i], c);
  }
  if (rebuilt != v) return std::nullopt;
  return coords;
}

int KoszulComplex::letter(int generator_id) const {
  const auto& g = r_.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] == generator_id) return static_cast<int>(i);
  return -1;
}

std::string KoszulComplex::format_ktilde(int n, const SparseVector& v) const {
  if (n == 0) return "1";
  Tensor t(v.field());
  for (const auto& [idx, c] : v) {
    Word letters(static_cast<std::size_t>(n));
    int rest = idx;
    for (int i = n; i-- > 0;) {
      letters[i] = r_.generators()[rest % m_];
      rest /= m_;
    }
    t.add(letters, c);
  }
  std::string body = format_combination(t, [&](const Word& w) { return join_slots(r_, w.begin(), w.end()); });
  return v.size() == 1 && v.begin()->second.is_one() ? body : "(" + body + ")";
}

int KoszulComplex::degree(int n, const Word& w) const { return r_.degree(w[0]) + n + r_.degree(w[2]); }

Tensor KoszulComplex::differential(int n, const Word& w) const {
  Field f = r_.field();
  Tensor out(f);
  const auto& gens = r_.generators();
  for (const auto& sp : left_.at(n).at(w[1]))
    for (const auto& [p, c] : r_.multiply(w[0], gens[sp.letter]))
      for (const auto& [k, ck] : sp.rest) out.add(Word{p, k, w[2]}, c * ck);
  Scalar sign = n % 2 == 0 ? Scalar::one(f) : -Scalar::one(f);
  for (const auto& sp : right_.at(n).at(w[1]))
    for (const auto& [p, c] : r_.multiply(gens[sp.letter], w[2]))
      for (const auto& [k, ck] : sp.rest) out.add(Word{w[0], k, p}, sign * c * ck);
  return out;
}

Element KoszulComplex::augmentation(const Word& w) const { return r_.multiply(w[0], w[2]); }

Tensor KoszulComplex::act(int a, const Word& w, int b, int) const {
  Tensor out(r_.field());
  for (const auto& [p, cp] : r_.multiply(a, w[0]))
    for (const auto& [q, cq] : r_.multiply(w[2], b)) out.add(Word{p, w[1], q}, cp * cq);
  return out;
}

std::vector<Word> KoszulComplex::basis(int n, int d) const {
  std::vector<Word> out;
  if (n >= static_cast<int>(ktilde_.size())) return out;
  for (int k = 0; k < ktilde_dim(n); ++k)
    for (int dr = 0; dr <= d - n; ++dr)
      for (int r : r_.graded_basis(dr))
        for (int rp : r_.graded_basis(d - n - dr)) out.push_back(Word{r, k, rp});
  return out;
}

std::vector<Word> KoszulComplex::generators(int n, int d) const {
  std::vector<Word> out;
  if (d != n || n >= static_cast<int>(ktilde_.size())) return out;
  for (int k = 0; k < ktilde_dim(n); ++k) out.push_back(Word{Algebra::unit(), k, Algebra::unit()});
  return out;
}

std::string KoszulComplex::format(int n, const Word& w) const {
  if (n == 0) return r_.format(w[0]) + " ⊗ " + r_.format(w[2]);
  return r_.format(w[0]) + " ⊗ " + format_ktilde(n, ktilde(n)[w[1]]) + " ⊗ " + r_.format(w[2]);
}

std::optional<std::vector<FreeTerm>> KoszulComplex::free_decomposition(int, const Word& w) const {
  return std::vector<FreeTerm>{{w[0], Word{Algebra::unit(), w[1], Algebra::unit()}, w[2]}};
}

Tensor KoszulComplex::include_in_bar(int n, const Word& w) const {
  Tensor out(r_.field());
  for (const auto& [idx, c] : ktilde(n)[w[1]]) {
    Word bw(static_cast<std::size_t>(n + 2));
    bw.front() = w[0];
    bw.back() = w[2];
    int rest = idx;
    for (int i = n; i >= 1; --i) {
      bw[i] = r_.generators()[rest % m_];
      rest /= m_;
    }
    out.add(bw, c);
  }
  return out;
}

// --- IntermediateComplex

IntermediateComplex::IntermediateComplex(const TwistedProductAlgebra& a, int max_degree)
    : a_(a), max_degree_(max_degree) {}

int IntermediateComplex::degree(int n, const Word& w) const {
  int d = 0;
  std::size_t len = static_cast<std::size_t>(n + 2);
  for (std::size_t i = 0; i < len; ++i) d += a_.R().degree(w[i]) + a_.S().degree(w[len + i]);
  return d;
}

Tensor IntermediateComplex::differential(int n, const Word& w) const {
  Field f = a_.field();
  Tensor out(f);
  std::size_t len = static_cast<std::size_t>(n + 2);
  Word rw(w.begin(), w.begin() + len), sw(w.begin() + len, w.end());
  Scalar sign = Scalar::one(f);
  for (std::size_t l = 0; l <= static_cast<std::size_t>(n); ++l) {
    Element rp = a_.R().multiply(rw[l], rw[l + 1]);
    Element sp = a_.S().multiply(sw[l], sw[l + 1]);
    for (const auto& [p, cp] : rp)
      for (const auto& [q, cq] : sp) {
        Word nw(rw.begin(), rw.begin() + l);
        nw.push_back(p);
        nw.insert(nw.end(), rw.begin() + l + 2, rw.end());
        nw.insert(nw.end(), sw.begin(), sw.begin() + l);
        nw.push_back(q);
        nw.insert(nw.end(), sw.begin() + l + 2, sw.end());
        out.add(nw, sign * cp * cq);
      }
    sign = -sign;
  }
  return out;
}

Element IntermediateComplex::augmentation(const Word& w) const {
  Element out(a_.field());
  for (const auto& [p, cp] : a_.R().multiply(w[0], w[1]))
    for (const auto& [q, cq] : a_.S().multiply(w[2], w[3])) out.add(a_.id(p, q), cp * cq);
  return out;
}

Tensor IntermediateComplex::act(int a, const Word& w, int b, int n) const {
  Field f = a_.field();
  const TwistingMap& tau = a_.twist();
  auto [ra, sa] = a_.pair(a);
  auto [rb, sb] = a_.pair(b);
  std::size_t len = static_cast<std::size_t>(n + 2);
  Word rw(w.begin(), w.begin() + len), sw(w.begin() + len, w.end());

  // Left: sa passes through the R letters, then lands on s_0.
  Tensor left(f);
  for (const auto& [v, c] : twist_through_R(tau, sa, rw, false))
    for (const auto& [p, cp] : a_.R().multiply(ra, v[0]))
      for (const auto& [q, cq] : a_.S().multiply(v[len], sw[0])) {
        Word nw(v.begin(), v.begin() + len);
        nw[0] = p;
        nw.insert(nw.end(), sw.begin(), sw.end());
        nw[len] = q;
        left.add(nw, c * cp * cq);
      }

  // Right: rb passes through the S letters, then lands on r_{n+1}.
  Tensor out(f);
  for (const auto& [u, cu] : left) {
    Word sw2(u.begin() + len, u.end());
    for (const auto& [v, c] : twist_through_S(tau, sw2, rb, false))
      for (const auto& [p, cp] : a_.R().multiply(u[len - 1], v[0]))
        for (const auto& [q, cq] : a_.S().multiply(v[len], sb)) {
          Word nw(u.begin(), u.begin() + len);
          nw[len - 1] = p;
          nw.insert(nw.end(), v.begin() + 1, v.end());
          nw.back() = q;
          out.add(nw, cu * c * cp * cq);
        }
  }
  return out;
}

std::vector<Word> IntermediateComplex::basis(int n, int d) const {
  std::vector<Word> out;
  std::size_t len = static_cast<std::size_t>(n + 2);
  std::vector<bool> mask(len, false);
  for (int dr = 0; dr <= d; ++dr) {
    auto rws = enumerate_words(a_.R(), len, dr, mask);
    if (rws.empty()) continue;
    auto sws = enumerate_words(a_.S(), len, d - dr, mask);
    for (const auto& r : rws)
      for (const auto& s : sws) {
        Word w = r;
        w.insert(w.end(), s.begin(), s.end());
        out.push_back(std::move(w));
      }
  }
  return out;
}

std::vector<Word> IntermediateComplex::generators(int, int) const {
  throw std::logic_error("Y has no distinguished free generators");
}

std::string IntermediateComplex::format(int n, const Word& w) const {
  std::size_t len = static_cast<std::size_t>(n + 2);
  return join_slots(a_.R(), w.begin(), w.begin() + len) + " ⊗ " + join_slots(a_.S(), w.begin() + len, w.end());
}

// --- TwistedProductComplex

TwistedProductComplex::TwistedProductComplex(const TwistedProductAlgebra& a, const Complex& c, const Complex& d,
                                             const LeftCompatibility& tau_c, const RightCompatibility& tau_d,
                                             std::string name)
    : a_(a), c_(c), d_(d), tau_c_(tau_c), tau_d_(tau_d), name_(std::move(name)) {}

int TwistedProductComplex::max_degree() const { return std::min(c_.max_degree(), d_.max_degree()); }

// Word length depends on how n splits; 0 marks "variable".
std::size_t TwistedProductComplex::word_length(int) const { return 0; }

Word TwistedProductComplex::join(int i, const Word& c, const Word& d) const {
  Word w{i};
  w.insert(w.end(), c.begin(), c.end());
  w.insert(w.end(), d.begin(), d.end());
  return w;
}

void TwistedProductComplex::split(int, const Word& w, int& i, Word& c, Word& d) const {
  i = w[0];
  std::size_t lc = c_.word_length(i);
  c.assign(w.begin() + 1, w.begin() + 1 + static_cast<std::ptrdiff_t>(lc));
  d.assign(w.begin() + 1 + static_cast<std::ptrdiff_t>(lc), w.end());
}

int TwistedProductComplex::degree(int n, const Word& w) const {
  int i;
  Word c, d;
  split(n, w, i, c, d);
  return c_.degree(i, c) + d_.degree(n - i, d);
}

Tensor TwistedProductComplex::differential(int n, const Word& w) const {
  Field f = a_.field();
  int i;
  Word c, d;
  split(n, w, i, c, d);
  int j = n - i;
  Tensor out(f);
  if (i >= 1)
    for (const auto& [cw, k] : c_.differential(i, c)) out.add(join(i - 1, cw, d), k);
  if (j >= 1) {
    Scalar sign = i % 2 == 0 ? Scalar::one(f) : -Scalar::one(f);
    for (const auto& [dw, k] : d_.differential(j, d)) out.add(join(i, c, dw), sign * k);
  }
  return out;
}

Element TwistedProductComplex::augmentation(const Word& w) const {
  Word c, d;
  int i;
  split(0, w, i, c, d);
  Element out(a_.field());
  for (const auto& [r, cr] : c_.augmentation(c))
    for (const auto& [s, cs] : d_.augmentation(d)) out.add(a_.id(r, s), cr * cs);
  return out;
}

Tensor TwistedProductComplex::act(int a, const Word& w, int b, int n) const {
  Field f = a_.field();
  int i;
  Word c, d;
  split(n, w, i, c, d);
  int j = n - i;
  auto [ra, sa] = a_.pair(a);
  auto [rb, sb] = a_.pair(b);
  Tensor out(f);
  for (const auto& [cw, cc] : tau_c_.apply(i, sa, c)) {
    int s2 = cw.back();
    Word c2(cw.begin(), cw.end() - 1);
    for (const auto& [dw, cd] : tau_d_.apply(j, d, rb)) {
      int r2 = dw.front();
      Word d2(dw.begin() + 1, dw.end());
      for (const auto& [rs, ct] : a_.twist().apply(s2, r2)) {
        Tensor left = c_.act(ra, c2, rs[0], i);
        Tensor right = d_.act(rs[1], d2, sb, j);
        for (const auto& [l, cl] : left)
          for (const auto& [r, cr] : right) out.add(join(i, l, r), cc * cd * ct * cl * cr);
      }
    }
  }
  return out;
}

std::vector<Word> TwistedProductComplex::basis(int n, int d) const {
  std::vector<Word> out;
  for (int i = 0; i <= n; ++i)
    for (int dc = 0; dc <= d; ++dc) {
      auto cs = c_.basis(i, dc);
      if (cs.empty()) continue;
      auto ds = d_.basis(n - i, d - dc);
      for (const auto& c : cs)
        for (const auto& dw : ds) out.push_back(join(i, c, dw));
    }
  return out;
}

std::vector<Word> TwistedProductComplex::generators(int n, int d) const {
  std::vector<Word> out;
  for (int i = 0; i <= n; ++i)
    for (int dc = 0; dc <= d; ++dc) {
      auto cs = c_.generators(i, dc);
      if (cs.empty()) continue;
      auto ds = d_.generators(n - i, d - dc);
      for (const auto& c : cs)
        for (const auto& dw : ds) out.push_back(join(i, c, dw));
    }
  return out;
}

std::string TwistedProductComplex::format(int n, const Word& w) const {
  int i;
  Word c, d;
  split(n, w, i, c, d);
  return "(" + c_.format(i, c) + ") ⊗ (" + d_.format(n - i, d) + ")";
}

// --- Hopf coactions and twists

Tensor iterated_coproduct(const HopfAlgebra& h, int x, int parts) {
  Field f = h.algebra().field();
  if (parts <= 1) return Tensor(f, Word{x});
  Tensor out(f);
  for (const auto& [w, c] : h.coproduct(x)) out.add(concat(Tensor(f, Word{w[0]}), iterated_coproduct(h, w[1], parts - 1)), c);
  return out;
}

Tensor bar_coaction(const HopfAlgebra& h, const Word& w, bool reduced) {
  const Algebra& a = h.algebra();
  Field f = a.field();
  // State words: {product of first legs so far, second legs...}.
  Tensor state(f, Word{Algebra::unit()});
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool inner = i > 0 && i + 1 < w.size();
    Tensor next(f);
    for (const auto& [sw, sc] : state)
      for (const auto& [cw, cc] : h.coproduct(w[i])) {
        if (reduced && inner && cw[1] == Algebra::unit()) continue;
        for (const auto& [p, cp] : a.multiply(sw[0], cw[0])) {
          Word nw = sw;
          nw[0] = p;
          nw.push_back(cw[1]);
          next.add(nw, sc * cc * cp);
        }
      }
    state = std::move(next);
  }
  return state;
}

KoszulHopfTwist::KoszulHopfTwist(const HopfAction& action, const KoszulComplex& k, int negate_in_degree)
    : action_(action), k_(k), negate_(negate_in_degree) {}

Tensor KoszulHopfTwist::act_hopf(int h, int n, const Word& c) const {
  const Algebra& r = k_.algebra();
  Field f = r.field();
  int m = k_.generator_count();
  const auto& gens = r.generators();
  Tensor out(f);
  for (const auto& [legs, cl] : iterated_coproduct(action_.hopf(), h, n + 2)) {
    SparseVector v(f);
    for (const auto& [idx, cv] : k_.ktilde(n)[c[1]]) {
      // Expand ^{h_2} v_{t_1} (x) ... (x) ^{h_{n+1}} v_{t_n} in V^{(x) n}.
      SparseVector part(f, 0);
      int rest = idx;
      Word letters(static_cast<std::size_t>(n));
      for (int i = n; i-- > 0;) {
        letters[i] = rest % m;
        rest /= m;
      }
      for (int i = 0; i < n; ++i) {
        Element img = action_.act(legs[i + 1], gens[letters[i]]);
        SparseVector next(f);
        for (const auto& [pi, pc] : part)
          for (const auto& [g, gc] : img) {
            int t = k_.letter(g);
            if (t < 0) throw ActionNotAdmissible("action does not preserve the generating space");
            next.add(pi * m + t, pc * gc);
          }
        part = std::move(next);
      }
      v.add(part, cv);
    }
    auto coords = k_.coordinates(n, v);
    if (!coords) throw ActionNotAdmissible("action does not preserve the Koszul space in degree " + std::to_string(n));
    Element left = action_.act(legs[0], c[0]);
    Element right = action_.act(legs[n + 1], c[2]);
    for (const auto& [p, cp] : left)
      for (const auto& [k, ck] : *coords)
        for (const auto& [q, cq] : right) out.add(Word{p, k, q}, cl * cp * ck * cq);
  }
  return out;
}

Tensor KoszulHopfTwist::apply(int n, int h, const Word& c) const {
  Field f = k_.field();
  Tensor out(f);
  for (const auto& [hw, ch] : action_.hopf().coproduct(h))
    for (const auto& [w, cw] : act_hopf(hw[0], n, c)) {
      Word nw = w;
      nw.push_back(hw[1]);
      out.add(nw, ch * cw);
    }
  if (n == negate_) out *= -Scalar::one(f);
  return out;
}

void check_koszul_admissible(const HopfAction& action, const KoszulComplex& k) {
  const Algebra& r = k.algebra();
  Field f = r.field();
  auto rel = r.quadratic_relations();
  Echelon span(f);
  for (const auto& v : *rel) span.insert(v);
  int m = k.generator_count();
  const auto& gens = r.generators();
  const Algebra& h = action.hopf().algebra();
  for (int x = 0; x < h.size(); ++x) {
    for (int g : gens)
      for (const auto& [y, c] : action.act(x, g))
        if (k.letter(y) < 0) throw ActionNotAdmissible("^" + h.format(x) + " " + r.format(g) + " leaves V");
    for (const auto& v : *rel) {
      SparseVector img(f);
      for (const auto& [legs, cl] : action.hopf().coproduct(x))
        for (const auto& [idx, cv] : v)
          for (const auto& [a, ca] : action.act(legs[0], gens[idx / m]))
            for (const auto& [b, cb] : action.act(legs[1], gens[idx % m]))
              img.add(k.letter(a) * m + k.letter(b), cl * cv * ca * cb);
      if (!span.contains(img))
        throw ActionNotAdmissible("^" + h.format(x) + " does not preserve the relation space");
    }
  }
}

// --- Checks

Tensor CorruptedDifferential::differential(int n, const Word& w) const {
  Tensor t = base_.differential(n, w);
  if (n != n_ || t.is_zero()) return t;
  Tensor out(t.field());
  bool first = true;
  for (const auto& [v, c] : t) {
    out.add(v, first ? -c : c);
    first = false;
  }
  return out;
}

CheckReport check_d_squared(const Complex& p, int n_max, int d_max) {
  CheckReport rep;
  rep.name = "d_squared";
  rep.instance = p.name();
  rep.hdeg = n_max;
  rep.gdeg = d_max;
  long checked = 0;
  int top = std::min(n_max, p.max_degree());
  for (int n = 1; n <= top && rep.pass; ++n)
    for (int d = 0; d <= d_max && rep.pass; ++d)
      for (const Word& w : p.basis(n, d)) {
        ++checked;
        Tensor dw = p.differential(n, w);
        if (n == 1) {
          Element e = p.augmentation(dw);
          if (!e.is_zero()) {
            rep.fail(p.format(n, w), "ε∂ = " + p.algebra().format(e), "0");
            break;
          }
        } else {
          Tensor ddw = p.differential(n - 1, dw);
          if (!ddw.is_zero()) {
            rep.fail(p.format(n, w), "∂∂ = " + p.format(n - 2, ddw), "0");
            break;
          }
        }
      }
  rep.detail = std::to_string(checked) + " basis words checked";
  return rep;
}

CheckReport check_truncated_exactness(const Complex& p, int n_max, int d_max) {
  CheckReport rep;
  rep.name = "exactness";
  rep.instance = p.name();
  rep.hdeg = n_max;
  rep.gdeg = d_max;
  if (p.max_degree() < n_max + 1) {
    rep.fail("hdeg " + std::to_string(n_max), "complex built to degree " + std::to_string(p.max_degree()),
             "at least " + std::to_string(n_max + 1));
    return rep;
  }
  // Rank counting only measures homology when d^2 = 0.
  CheckReport sq = check_d_squared(p, n_max + 1, d_max);
  if (!sq.pass) {
    rep.fail(sq.witness, sq.lhs, sq.rhs);
    rep.detail = "not a complex";
    return rep;
  }
  const Algebra& a = p.algebra();
  Field f = p.field();
  bool graded = p.graded();
  std::ostringstream detail;
  for (int d = 0; d <= d_max && rep.pass; ++d) {
    std::vector<std::vector<Word>> blocks;
    for (int k = 0; k <= n_max + 1; ++k) blocks.push_back(graded ? p.basis(k, d) : p.basis_up_to(k, d));
    std::vector<int> abasis = graded ? a.graded_basis(d) : a.basis_up_to(d);
    std::map<int, int> aindex;
    for (std::size_t i = 0; i < abasis.size(); ++i) aindex[abasis[i]] = static_cast<int>(i);

    // ranks[k] = rank of the map out of block k (k = 0: the augmentation).
    std::vector<std::size_t> ranks;
    {
      std::vector<SparseVector> cols;
      for (const Word& w : blocks[0]) {
        SparseVector v(f);
        for (const auto& [x, c] : p.augmentation(w)) v.add(aindex.at(x), c);
        cols.push_back(v);
      }
      ranks.push_back(rank(f, cols));
    }
    for (int k = 1; k <= n_max + 1; ++k) {
      std::map<Word, int> index;
      for (std::size_t i = 0; i < blocks[k - 1].size(); ++i) index[blocks[k - 1][i]] = static_cast<int>(i);
      std::vector<SparseVector> cols;
      for (const Word& w : blocks[k]) {
        SparseVector v(f);
        for (const auto& [x, c] : p.differential(k, w)) {
          auto it = index.find(x);
          if (it == index.end())
            throw std::logic_error("differential leaves the degree block: " + p.format(k - 1, x));
          v.add(it->second, c);
        }
        cols.push_back(v);
      }
      ranks.push_back(rank(f, cols));
    }

    std::string label = graded ? "degree " : "degree <= ";
    if (ranks[0] != abasis.size()) {
      rep.fail("A in " + label + std::to_string(d), "image of ε has dimension " + std::to_string(ranks[0]),
               "dim A = " + std::to_string(abasis.size()));
      break;
    }
    detail << label << d << ":";
    for (int k = 0; k <= n_max; ++k) {
      long h = static_cast<long>(blocks[k].size()) - static_cast<long>(ranks[k]) - static_cast<long>(ranks[k + 1]);
      detail << " H_" << k << "=" << h;
      if (h != 0)
        rep.fail("H_" + std::to_string(k) + " in " + label + std::to_string(d),
                 "dim ker = " + std::to_string(blocks[k].size() - ranks[k]),
                 "dim im = " + std::to_string(ranks[k + 1]));
    }
    detail << "; ";
  }
  rep.detail = detail.str();
  return rep;
}

}  // namespace awez
