#include "awez/complex.hpp"

namespace awez {

Tensor Complex::differential(int n, const Tensor& t) const {
  Tensor out(field());
  for (const auto& [w, c] : t) out.add(differential(n, w), c);
  return out;
}

Element Complex::augmentation(const Tensor& t) const {
  Element out(field());
  for (const auto& [w, c] : t) out.add(augmentation(w), c);
  return out;
}

Tensor Complex::act(const Element& a, const Tensor& t, const Element& b, int n) const {
  Tensor out(field());
  for (const auto& [ai, ca] : a)
    for (const auto& [w, cw] : t)
      for (const auto& [bi, cb] : b) out.add(act(ai, w, bi, n), ca * cw * cb);
  return out;
}

std::string Complex::format(int n, const Tensor& t) const {
  return format_combination(t, [&](const Word& w) { return format(n, w); });
}

std::vector<Word> Complex::basis_up_to(int n, int d) const {
  std::vector<Word> out;
  for (int k = 0; k <= d; ++k) {
    auto part = basis(n, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

namespace {

void fill_words(const Algebra& a, const std::vector<bool>& nonunit, std::size_t pos, int left, Word& cur,
                std::vector<Word>& out) {
  if (pos == cur.size()) {
    if (left == 0) out.push_back(cur);
    return;
  }
  bool last = pos + 1 == cur.size();
  for (int k = last ? left : 0; k <= left; ++k)
    for (int id : a.graded_basis(k)) {
      if (nonunit[pos] && id == Algebra::unit()) continue;
      cur[pos] = id;
      fill_words(a, nonunit, pos + 1, left - k, cur, out);
    }
}

}  // namespace

std::vector<Word> enumerate_words(const Algebra& a, std::size_t slots, int d, const std::vector<bool>& nonunit) {
  std::vector<Word> out;
  if (d < 0) return out;
  Word cur(slots, 0);
  if (slots == 0) {
    if (d == 0) out.push_back(cur);
    return out;
  }
  fill_words(a, nonunit, 0, d, cur, out);
  return out;
}

}  // namespace awez
