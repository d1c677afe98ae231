#include "rev/metrics.hpp"

#include <algorithm>

namespace rev {

int minDist(Interp v, const ModelSet& m) {
  if (m.empty()) throw EmptyOperandError("minDist over an empty model set");
  int best = Signature::kMaxAtoms + 1;
  for (Interp w : m) best = std::min(best, hamming(v, w));
  return best;
}

int maxDist(Interp v, const ModelSet& m) {
  if (m.empty()) throw EmptyOperandError("maxDist over an empty model set");
  int best = -1;
  for (Interp w : m) best = std::max(best, hamming(v, w));
  return best;
}

int surprise(Interp v, Interp w, const ModelSet& m) {
  if (m.empty()) throw EmptyOperandError("surprise relative to an empty model set");
  if (!m.contains(w))
    throw DomainError("surprise is only defined for models of the context");
  return hamming(v, w) - minDist(v, m);
}

DistanceTable buildTable(const ModelSet& phiModels, const ModelSet& muModels,
                         TableKind kind) {
  if (phiModels.empty() || muModels.empty())
    throw EmptyOperandError("tables need nonempty operands");
  DistanceTable t;
  t.kind = kind;
  t.rows.assign(phiModels.begin(), phiModels.end());
  t.cols.assign(muModels.begin(), muModels.end());
  const int nr = phiModels.size();
  const int nc = muModels.size();
  t.raw.assign(nr, std::vector<int>(nc, 0));
  t.cells.assign(nr, std::vector<int>(nc, 0));
  t.rowRef.assign(nr, 0);
  for (int i = 0; i < nr; ++i) {
    if (kind == TableKind::Surprise) t.rowRef[i] = minDist(t.rows[i], muModels);
    for (int j = 0; j < nc; ++j) {
      t.raw[i][j] = hamming(t.rows[i], t.cols[j]);
      t.cells[i][j] = t.raw[i][j] - t.rowRef[i];
    }
  }
  t.colMin.assign(nc, 0);
  t.colMax.assign(nc, 0);
  for (int j = 0; j < nc; ++j) {
    int lo = t.cells[0][j], hi = t.cells[0][j];
    for (int i = 1; i < nr; ++i) {
      lo = std::min(lo, t.cells[i][j]);
      hi = std::max(hi, t.cells[i][j]);
    }
    t.colMin[j] = lo;
    t.colMax[j] = hi;
  }
  return t;
}

}  // namespace rev
