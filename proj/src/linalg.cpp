#include "awez/linalg.hpp"

#include <stdexcept>

namespace awez {

bool Echelon::reduce(SparseVector& v, SparseVector& combo) const {
  while (!v.is_zero()) {
    auto lead = v.begin();
    auto it = rows_.find(lead->first);
    if (it == rows_.end()) return true;
    Scalar c = -lead->second;
    v.add(it->second.vec, c);
    combo.add(it->second.origin, c);
  }
  return false;
}

bool Echelon::insert(const SparseVector& v, int origin) {
  SparseVector vec = v;
  SparseVector combo(field_);
  if (origin >= 0) combo.add(origin, Scalar::one(field_));
  if (!reduce(vec, combo)) return false;
  Scalar inv = vec.begin()->second.inverse();
  vec *= inv;
  combo *= inv;
  int pivot = vec.begin()->first;
  rows_.emplace(pivot, Row{std::move(vec), std::move(combo)});
  return true;
}

bool Echelon::contains(const SparseVector& v) const {
  SparseVector vec = v;
  SparseVector combo(field_);
  return !reduce(vec, combo);
}

std::optional<SparseVector> Echelon::express(const SparseVector& v) const {
  SparseVector vec = v;
  SparseVector combo(field_);
  if (reduce(vec, combo)) return std::nullopt;
  return -combo;
}

std::vector<int> Echelon::pivots() const {
  std::vector<int> out;
  for (const auto& [p, row] : rows_) out.push_back(p);
  return out;
}

std::vector<std::pair<SparseVector, SparseVector>> Echelon::rref_with_origins() const {
  std::vector<std::pair<SparseVector, SparseVector>> rows;
  for (const auto& [p, row] : rows_) rows.emplace_back(row.vec, row.origin);
  // Back substitution, last pivot first.
  for (std::size_t i = rows.size(); i-- > 0;) {
    int p = rows[i].first.begin()->first;
    for (std::size_t j = 0; j < i; ++j) {
      Scalar c = rows[j].first.coeff(p);
      if (c.is_zero()) continue;
      rows[j].first.add(rows[i].first, -c);
      rows[j].second.add(rows[i].second, -c);
    }
  }
  return rows;
}

std::vector<SparseVector> Echelon::rref() const {
  std::vector<SparseVector> out;
  for (auto& [vec, origin] : rref_with_origins()) out.push_back(std::move(vec));
  return out;
}

std::size_t rank(Field f, const std::vector<SparseVector>& vectors) {
  Echelon e(f);
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

std::optional<SparseVector> solve(Field f, const std::vector<SparseVector>& columns,
                                  const SparseVector& b) {
  Echelon e(f);
  for (std::size_t j = 0; j < columns.size(); ++j) e.insert(columns[j], static_cast<int>(j));
  return e.express(b);
}

std::vector<SparseVector> kernel(Field f, const std::vector<SparseVector>& columns) {
  Echelon e(f);
  std::vector<SparseVector> out;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (auto combo = e.express(columns[j])) {
      SparseVector k = -*combo;
      k.add(static_cast<int>(j), Scalar::one(f));
      out.push_back(std::move(k));
    } else {
      e.insert(columns[j], static_cast<int>(j));
    }
  }
  return out;
}

std::vector<SparseVector> rref(Field f, const std::vector<SparseVector>& rows) {
  Echelon e(f);
  for (const auto& v : rows) e.insert(v);
  return e.rref();
}

std::vector<SparseVector> intersect(Field f, const std::vector<SparseVector>& u,
                                    const std::vector<SparseVector>& w) {
  std::vector<SparseVector> bu = rref(f, u);
  std::vector<SparseVector> bw = rref(f, w);
  std::vector<SparseVector> columns = bu;
  for (const auto& v : bw) columns.push_back(-v);
  std::vector<SparseVector> out;
  for (const auto& k : kernel(f, columns)) {
    SparseVector v(f);
    for (const auto& [j, c] : k)
      if (j < static_cast<int>(bu.size())) v.add(bu[j], c);
    out.push_back(std::move(v));
  }
  return rref(f, out);
}

std::vector<SparseVector> subspace_intersection(Field f,
                                                const std::vector<std::vector<SparseVector>>& bases) {
  if (bases.empty()) throw std::invalid_argument("intersection of an empty list of subspaces");
  std::vector<SparseVector> acc = rref(f, bases.front());
  for (std::size_t i = 1; i < bases.size(); ++i) acc = intersect(f, acc, bases[i]);
  return acc;
}

std::vector<int> complement_columns(Field f, const std::vector<SparseVector>& rows, int dim) {
  Echelon e(f);
  for (const auto& v : rows) e.insert(v);
  std::vector<int> piv = e.pivots();
  std::vector<int> out;
  std::size_t k = 0;
  for (int c = 0; c < dim; ++c) {
    while (k < piv.size() && piv[k] < c) ++k;
    if (k < piv.size() && piv[k] == c) continue;
    out.push_back(c);
  }
  return out;
}

}  // namespace awez
