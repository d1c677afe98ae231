#include "rev/operators.hpp"

#include <algorithm>

namespace rev {

std::string_view operatorName(OperatorKind k) {
  switch (k) {
    case OperatorKind::DalalMinMin:
      return "dalal";
    case OperatorKind::DistMinMax:
      return "dmax";
    case OperatorKind::SurpriseMinMax:
      return "smax";
  }
  return "?";
}

std::optional<OperatorKind> operatorFromName(std::string_view name) {
  if (name == "dalal") return OperatorKind::DalalMinMin;
  if (name == "dmax") return OperatorKind::DistMinMax;
  if (name == "smax") return OperatorKind::SurpriseMinMax;
  return std::nullopt;
}

int modelScore(OperatorKind k, Interp w, const ModelSet& phi,
               const ModelSet& mu) {
  switch (k) {
    case OperatorKind::DalalMinMin:
      return minDist(w, phi);
    case OperatorKind::DistMinMax:
      return maxDist(w, phi);
    case OperatorKind::SurpriseMinMax: {
      int best = 0;
      bool first = true;
      for (Interp v : phi) {
        int s = hamming(v, w) - minDist(v, mu);
        if (first || s > best) best = s;
        first = false;
      }
      if (first) throw EmptyOperandError("score against an empty prior");
      return best;
    }
  }
  throw DomainError("unknown operator kind");
}

ModelSet reviseModels(OperatorKind k, const ModelSet& phi,
                      const ModelSet& mu) {
  if (mu.empty()) return ModelSet{};
  if (phi.empty()) return mu;  // degenerate prior: all scores tie

  // The surprise reference distances depend on v only; hoist them.
  std::vector<int> ref;
  if (k == OperatorKind::SurpriseMinMax) {
    ref.reserve(phi.size());
    for (Interp v : phi) ref.push_back(minDist(v, mu));
  }
  auto score = [&](Interp w) {
    switch (k) {
      case OperatorKind::DalalMinMin:
        return minDist(w, phi);
      case OperatorKind::DistMinMax:
        return maxDist(w, phi);
      default: {
        int best = hamming(phi[0], w) - ref[0];
        for (int i = 1; i < phi.size(); ++i)
          best = std::max(best, hamming(phi[i], w) - ref[i]);
        return best;
      }
    }
  };

  int best = 0;
  bool first = true;
  std::vector<Interp> out;
  for (Interp w : mu) {
    int s = score(w);
    if (first || s < best) {
      best = s;
      out.clear();
    }
    if (s == best) out.push_back(w);
    first = false;
  }
  return ModelSet(std::move(out));
}

RevisionResult reviseByModels(OperatorKind k, const ModelSet& phi,
                              const ModelSet& mu, const Signature& sig) {
  RevisionResult r;
  r.degeneratePrior = phi.empty();
  r.resultModels = reviseModels(k, phi, mu);
  r.resultFormula = formulaFromModels(r.resultModels, sig);
  if (!phi.empty() && !mu.empty()) {
    r.table = buildTable(phi, mu,
                         k == OperatorKind::SurpriseMinMax
                             ? TableKind::Surprise
                             : TableKind::Distance);
    r.scorePerModel.reserve(mu.size());
    for (Interp w : mu)
      r.scorePerModel.emplace_back(w, modelScore(k, w, phi, mu));
  } else if (r.degeneratePrior) {
    for (Interp w : mu) r.scorePerModel.emplace_back(w, 0);
  }
  return r;
}

RevisionResult revise(OperatorKind k, const Formula& phi, const Formula& mu,
                      const Signature& sig) {
  return reviseByModels(k, models(phi, sig), models(mu, sig), sig);
}

}  // namespace rev
