#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "rev/formula.hpp"
#include "rev/metrics.hpp"

namespace rev {

enum class OperatorKind { DalalMinMin, DistMinMax, SurpriseMinMax };

inline constexpr OperatorKind kAllOperators[] = {
    OperatorKind::DalalMinMin, OperatorKind::DistMinMax,
    OperatorKind::SurpriseMinMax};

std::string_view operatorName(OperatorKind k);       // dalal | dmax | smax
std::optional<OperatorKind> operatorFromName(std::string_view name);

// Aggregate score of w against [phi]: min distance (Dalal), max distance
// (min-max) or max mu-relative surprise. Surprise scores are comparable only
// within a single mu.
int modelScore(OperatorKind k, Interp w, const ModelSet& phi,
               const ModelSet& mu);

// The selection core: the full argmin set of modelScore over [mu], ties kept.
// Conventions for degenerate inputs: empty [mu] gives the empty set (the
// result is ⊥); empty [phi] scores every model equally and returns [mu].
ModelSet reviseModels(OperatorKind k, const ModelSet& phi, const ModelSet& mu);

struct RevisionResult {
  ModelSet resultModels;
  Formula resultFormula;  // canonical DNF over the signature
  std::optional<DistanceTable> table;  // absent when either operand is empty
  std::vector<std::pair<Interp, int>> scorePerModel;  // per w in [mu]
  bool degeneratePrior = false;                       // [phi] was empty
};

RevisionResult reviseByModels(OperatorKind k, const ModelSet& phi,
                              const ModelSet& mu, const Signature& sig);

RevisionResult revise(OperatorKind k, const Formula& phi, const Formula& mu,
                      const Signature& sig);

}  // namespace rev
