#pragma once

#include <string>
#include <vector>

#include "rev/logic.hpp"

namespace rev {

// d_H(v, w) = |v (triangle) w|. Both interpretations must live over the same
// signature; masks carry no signature, so this is a structural precondition.
inline int hamming(Interp v, Interp w) { return cardinality(symDiff(v, w)); }

// min / max over w in m of hamming(v, w); EmptyOperandError on empty m.
int minDist(Interp v, const ModelSet& m);
int maxDist(Interp v, const ModelSet& m);

// Relative Hamming surprise of v with respect to w, relative to m:
// hamming(v, w) - minDist(v, m). Requires w in m (DomainError otherwise).
int surprise(Interp v, Interp w, const ModelSet& m);

enum class TableKind { Distance, Surprise };

// The v-by-w measure matrix with per-column aggregates. Rows are the models
// of phi, columns the models of mu, both in canonical order. For surprise
// tables, cell(i,j) = raw(i,j) - rowRef[i] and every row contains a zero.
struct DistanceTable {
  TableKind kind = TableKind::Distance;
  std::vector<Interp> rows;
  std::vector<Interp> cols;
  std::vector<std::vector<int>> cells;
  std::vector<std::vector<int>> raw;  // plain distances, == cells for Distance
  std::vector<int> rowRef;            // minDist(row, mu); zeros for Distance
  std::vector<int> colMin;
  std::vector<int> colMax;
};

// Both operands must be nonempty.
DistanceTable buildTable(const ModelSet& phiModels, const ModelSet& muModels,
                         TableKind kind);

}  // namespace rev
