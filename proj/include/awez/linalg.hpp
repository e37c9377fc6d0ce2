#pragma once

#include <map>
#include <optional>
#include <vector>

#include "awez/linear.hpp"

namespace awez {

using SparseVector = Linear<int>;

// Incremental row echelon form over a field with a fixed pivot rule: the pivot
// of a row is its smallest column index. Optionally tracks, for each stored
// row, the combination of inserted vectors ("origins") that produced it.
class Echelon {
 public:
  explicit Echelon(Field f) : field_(f) {}

  // Returns true when v was independent of the stored rows (and is now stored).
  bool insert(const SparseVector& v, int origin = -1);
  bool contains(const SparseVector& v) const;
  // Coefficients over origins expressing v, if v lies in the span.
  std::optional<SparseVector> express(const SparseVector& v) const;

  std::size_t rank() const { return rows_.size(); }
  std::vector<int> pivots() const;
  // Reduced row echelon basis: pivot entries 1, zero in other pivot columns.
  std::vector<SparseVector> rref() const;
  // Same rows as rref(), each paired with its origin combination.
  std::vector<std::pair<SparseVector, SparseVector>> rref_with_origins() const;

 private:
  struct Row {
    SparseVector vec;
    SparseVector origin;
  };
  // Reduces v (and its combination) against stored rows until the leading
  // column has no pivot. Returns false when v became zero.
  bool reduce(SparseVector& v, SparseVector& combo) const;

  Field field_;
  std::map<int, Row> rows_;
};

std::size_t rank(Field f, const std::vector<SparseVector>& vectors);

// Finds x with sum_j x[j] * columns[j] == b. Pivot order is fixed, so the
// answer is deterministic.
std::optional<SparseVector> solve(Field f, const std::vector<SparseVector>& columns,
                                  const SparseVector& b);

// Basis of { x : sum_j x[j] * columns[j] == 0 }.
std::vector<SparseVector> kernel(Field f, const std::vector<SparseVector>& columns);

std::vector<SparseVector> rref(Field f, const std::vector<SparseVector>& rows);

// Reduced row echelon basis of span(U) intersected with span(W).
std::vector<SparseVector> intersect(Field f, const std::vector<SparseVector>& u,
                                    const std::vector<SparseVector>& w);

// Reduced row echelon basis of the intersection of all given spans.
// Throws std::invalid_argument on an empty list.
std::vector<SparseVector> subspace_intersection(Field f,
                                                const std::vector<std::vector<SparseVector>>& bases);

// Column indices in [0, dim) that are not pivots of span(rows): the standard
// basis vectors at these indices span a complement of span(rows).
std::vector<int> complement_columns(Field f, const std::vector<SparseVector>& rows, int dim);

}  // namespace awez
