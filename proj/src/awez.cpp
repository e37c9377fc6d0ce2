#include "awez/awez.hpp"

#include <algorithm>

namespace awez {

std::string Shuffle::cycles() const {
  std::string out;
  std::vector<bool> seen(image.size(), false);
  for (std::size_t start = 0; start < image.size(); ++start) {
    if (seen[start] || image[start] == static_cast<int>(start) + 1) continue;
    out += "(";
    std::size_t i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = true;
      if (!first) out += " ";
      out += std::to_string(i + 1);
      first = false;
      i = static_cast<std::size_t>(image[i] - 1);
    }
    out += ")";
  }
  return out.empty() ? "(1)" : out;
}

std::vector<Shuffle> enumerate_shuffles(int l, int m) {
  int n = l + m;
  // A shuffle is determined by the set {sigma(1), ..., sigma(l)}.
  std::vector<int> chosen(static_cast<std::size_t>(n), 0);
  std::fill(chosen.begin(), chosen.begin() + l, 1);
  std::vector<Shuffle> out;
  do {
    Shuffle s;
    s.image.resize(static_cast<std::size_t>(n));
    int a = 0, b = l;
    for (int pos = 1; pos <= n; ++pos) {
      if (chosen[pos - 1])
        s.image[a++] = pos;
      else
        s.image[b++] = pos;
    }
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += s.image[i] > s.image[j];
    s.sign = inversions % 2 == 0 ? 1 : -1;
    out.push_back(std::move(s));
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  std::sort(out.begin(), out.end(), [](const Shuffle& x, const Shuffle& y) { return x.image < y.image; });
  return out;
}

namespace {

Scalar sign_of(Field f, int exponent) { return exponent % 2 == 0 ? Scalar::one(f) : -Scalar::one(f); }

// Drops words with a unit letter strictly between the first and last position
// of each listed range [begin, end).
Tensor drop_unit_inner(const Tensor& t, const std::function<std::vector<std::pair<int, int>>(const Word&)>& ranges) {
  Tensor out(t.field());
  for (const auto& [w, c] : t) {
    bool keep = true;
    for (auto [b, e] : ranges(w))
      for (int i = b + 1; i + 1 < e && keep; ++i) keep = w[i] != Algebra::unit();
    if (keep) out.add(w, c);
  }
  return out;
}

}  // namespace

AwEz::AwEz(const TwistedProductAlgebra& a, int max_degree, ThetaSign sign)
    : a_(a),
      max_degree_(max_degree),
      sign_(sign),
      bA_(a, false, max_degree),
      bAbar_(a, true, max_degree),
      bR_(a.R(), false, max_degree),
      bRbar_(a.R(), true, max_degree),
      bS_(a.S(), false, max_degree),
      bSbar_(a.S(), true, max_degree),
      tl_(a.twist(), false),
      tlbar_(a.twist(), true),
      tr_(a.twist(), false),
      trbar_(a.twist(), true),
      X_(a, bR_, bS_, tl_, tr_, "B_R ⊗τ B_S"),
      Xbar_(a, bRbar_, bSbar_, tlbar_, trbar_, "B̄_R ⊗τ B̄_S"),
      Y_(a, max_degree),
      rho_("ϱ", bA_, Y_, [this](int n, const Word& w) { return unshuffle(n, w); }),
      rho_inv_("ϱ⁻¹", Y_, bA_, [this](int n, const Word& w) { return shuffle(n, w); }),
      aw_b_("AW_B", bA_, X_, [this](int n, const Word& w) { return aw_unreduced(n, w); }),
      ez_b_("EZ_B", X_, bA_, [this](int n, const Word& w) { return ez_unreduced(n, w); }),
      aw_("AW", bAbar_, Xbar_, [this](int n, const Word& w) { return aw(n, w); }),
      ez_("EZ", Xbar_, bAbar_, [this](int n, const Word& w) { return ez(n, w); }),
      in2_("in_2", Xbar_, X_, [this](int, const Word& w) { return Tensor(a_.field(), w); }) {}

Tensor AwEz::unshuffle(int n, const Word& w) const {
  Field f = a_.field();
  std::size_t len = static_cast<std::size_t>(n + 2);
  // State words: {r_0, ..., r_{i-1}, s_0, ..., s_{i-1}}; at step i the letter r_i
  // moves left past s_0, ..., s_{i-1}.
  auto [r0, s0] = a_.pair(w[0]);
  Tensor state(f, Word{r0, s0});
  for (std::size_t i = 1; i < len; ++i) {
    auto [ri, si] = a_.pair(w[i]);
    Tensor next(f);
    for (const auto& [u, cu] : state) {
      Word rs(u.begin(), u.begin() + i), ss(u.begin() + i, u.end());
      for (const auto& [v, cv] : twist_through_S(a_.twist(), ss, ri, false)) {
        Word nw = rs;
        nw.push_back(v[0]);
        nw.insert(nw.end(), v.begin() + 1, v.end());
        nw.push_back(si);
        next.add(nw, cu * cv);
      }
    }
    state = std::move(next);
  }
  return state;
}

Tensor AwEz::shuffle(int n, const Word& y) const {
  Field f = a_.field();
  std::size_t len = static_cast<std::size_t>(n + 2);
  const TwistingMap& tau = a_.twist();
  // State words: {r_0, ..., r_i, s_0, ..., s_i, A letters i+1, ..., n+1}.
  Tensor state(f, y);
  for (std::size_t i = len - 1; i >= 1; --i) {
    Tensor next(f);
    for (const auto& [u, cu] : state) {
      int r = u[i];
      Word ss(u.begin() + i + 1, u.begin() + 2 * i + 2);
      Word tail(u.begin() + 2 * i + 2, u.end());
      // r moves right past s_0, ..., s_{i-1} with the inverse twist.
      // Words {r', s'_0, ..., s'_{j-1}}.
      Tensor passed(f, Word{r});
      for (std::size_t j = 0; j < i; ++j) {
        Tensor step(f);
        for (const auto& [p, cp] : passed)
          for (const auto& [v, cv] : tau.apply_inverse(p[0], ss[j])) {
            Word nw{v[1]};
            nw.insert(nw.end(), p.begin() + 1, p.end());
            nw.push_back(v[0]);
            step.add(nw, cp * cv);
          }
        passed = std::move(step);
      }
      for (const auto& [p, cp] : passed) {
        Word nw(u.begin(), u.begin() + i);
        nw.insert(nw.end(), p.begin() + 1, p.end());
        nw.push_back(a_.id(p[0], ss[i]));
        nw.insert(nw.end(), tail.begin(), tail.end());
        next.add(nw, cu * cp);
      }
    }
    state = std::move(next);
  }
  Tensor out(f);
  for (const auto& [u, c] : state) {
    Word nw{a_.id(u[0], u[1])};
    nw.insert(nw.end(), u.begin() + 2, u.end());
    out.add(nw, c);
  }
  return out;
}

Tensor AwEz::front_back(int n, const Word& y) const {
  Field f = a_.field();
  std::size_t len = static_cast<std::size_t>(n + 2);
  Word rw(y.begin(), y.begin() + len), sw(y.begin() + len, y.end());
  const Algebra& R = a_.R();
  const Algebra& S = a_.S();
  Tensor out(f);
  for (int l = 0; l <= n; ++l) {
    Element front(f, rw[0]);
    for (int i = 1; i <= l; ++i) front = R.multiply(front, rw[i]);
    Element back(f, sw[l + 1]);
    for (int i = l + 2; i <= n + 1; ++i) back = S.multiply(back, sw[i]);
    Scalar sign = sign_of(f, l * (n - l));
    for (const auto& [p, cp] : front)
      for (const auto& [q, cq] : back) {
        Word c{p};
        c.insert(c.end(), rw.begin() + l + 1, rw.end());
        Word d(sw.begin(), sw.begin() + l + 1);
        d.push_back(q);
        out.add(X_.join(n - l, c, d), sign * cp * cq);
      }
  }
  return out;
}

Tensor AwEz::shuffle_map(int n, const Word& x) const {
  Field f = a_.field();
  int l;
  Word c, d;
  X_.split(n, x, l, c, d);
  int m = n - l;
  Scalar prefactor = sign_ == ThetaSign::Literal ? sign_of(f, l * m) : Scalar::one(f);
  Tensor out(f);
  for (const Shuffle& sigma : enumerate_shuffles(l, m)) {
    Word rw(static_cast<std::size_t>(n + 2), Algebra::unit());
    Word sw(static_cast<std::size_t>(n + 2), Algebra::unit());
    rw.front() = c.front();
    rw.back() = c.back();
    sw.front() = d.front();
    sw.back() = d.back();
    for (int i = 1; i <= l; ++i) rw[sigma.image[i - 1]] = c[i];
    for (int j = 1; j <= m; ++j) sw[sigma.image[l + j - 1]] = d[j];
    Word y = rw;
    y.insert(y.end(), sw.begin(), sw.end());
    out.add(y, sigma.sign > 0 ? prefactor : -prefactor);
  }
  return out;
}

Tensor AwEz::aw_unreduced(int n, const Word& w) const {
  Tensor out(a_.field());
  for (const auto& [y, c] : unshuffle(n, w)) out.add(front_back(n, y), c);
  return out;
}

Tensor AwEz::ez_unreduced(int n, const Word& x) const {
  Tensor out(a_.field());
  for (const auto& [y, c] : shuffle_map(n, x)) out.add(shuffle(n, y), c);
  return out;
}

Tensor AwEz::aw(int n, const Word& w) const {
  return drop_unit_inner(aw_unreduced(n, w), [this, n](const Word& x) {
    int i = x[0];
    int lc = i + 2;
    return std::vector<std::pair<int, int>>{{1, 1 + lc}, {1 + lc, 1 + lc + (n - i) + 2}};
  });
}

Tensor AwEz::ez(int n, const Word& x) const {
  return drop_unit_inner(ez_unreduced(n, x),
                         [](const Word& w) { return std::vector<std::pair<int, int>>{{0, static_cast<int>(w.size())}}; });
}

Tensor AwEz::aw(int n, const Tensor& t) const {
  Tensor out(a_.field());
  for (const auto& [w, c] : t) out.add(aw(n, w), c);
  return out;
}

Tensor AwEz::ez(int n, const Tensor& t) const {
  Tensor out(a_.field());
  for (const auto& [w, c] : t) out.add(ez(n, w), c);
  return out;
}

}  // namespace awez
