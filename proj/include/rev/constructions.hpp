#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rev/operators.hpp"

namespace rev {

// Fresh-atom padding sets x_i, one per model of phi (canonical order), with
// |x_i| = minDist(v_i, [mu]) over the original signature. The x_i are pairwise
// disjoint and consist entirely of minted atoms.
struct AdjunctionSet {
  Signature extendedSig;
  int originalAtoms = 0;
  std::vector<Interp> priorModels;  // v_i
  std::vector<Interp> freshSets;    // x_i, over extendedSig
};

// v_i* = v_i with every adjunction set except its own added.
struct CorrectedInterpretation {
  Interp base;
  Interp starred;
};

AdjunctionSet adjunction(const ModelSet& phi, const ModelSet& mu,
                         const Signature& sig);
std::vector<CorrectedInterpretation> corrected(const AdjunctionSet& adj);

// Best-of-best: minimal-cardinality elements of {w (triangle) v : w in [mu],
// v in [phi]} — the epsilon-revision of the flipped disjunction.
ModelSet beta(const ModelSet& phi, const ModelSet& mu);

// (union of flips of betaModels by each v in [phi]) intersected with [mu];
// equals the Dalal result.
ModelSet recoverBoB(const ModelSet& phi, const ModelSet& betaModels,
                    const ModelSet& mu);

// Best-of-worst: for each w in [mu], flip the prior by w, alpha-select the
// witnesses (rows at maximal distance from w) and keep the canonical one
// (first maximizer in row order); epsilon-select the pool. The witness
// cardinalities are exactly the max-distance scores, so the survivors
// decompose the argmin-max models.
ModelSet gamma(const ModelSet& phi, const ModelSet& mu);

// Inverts each surviving witness's own flip: w is recovered iff
// w (triangle) v*(w) lies in gammaModels; equals the min-max result.
ModelSet recoverBoW(const ModelSet& phi, const ModelSet& gammaModels,
                    const ModelSet& mu);

// Best-surprise: the gamma pipeline run over the corrected interpretations
// v_i* on the extended signature, where corrected distances preserve the
// surprise ordering.
ModelSet sigmaConstruct(const ModelSet& phi, const ModelSet& mu,
                        const Signature& sig);

ModelSet recoverBoWS(const ModelSet& phi, const ModelSet& sigmaModels,
                     const ModelSet& mu, const AdjunctionSet& adj);

// Formula-level entry points.
ModelSet beta(const Formula& phi, const Formula& mu, const Signature& sig);
ModelSet gamma(const Formula& phi, const Formula& mu, const Signature& sig);
ModelSet sigmaConstruct(const Formula& phi, const Formula& mu,
                        const Signature& sig);

// One replayable step of a derivation. `inputs`, `param` and `op` determine
// `output`; replayStep recomputes it.
struct TraceStep {
  enum class Op {
    Consider,        // list the prior's models
    Adjoin,          // mint adjunction atoms, output the corrected prior
    Flip,            // flip inputs[0] by param
    SelectMinCard,   // epsilon-revision: keep minimal-cardinality models
    SelectNearFull,  // alpha-revision: keep maximal-cardinality models
    CollectWitness,  // inputs are the prior rows as ordered singletons;
                     //   output is param flipped by its first maximizer row
    Union,           // union of all inputs
    Unflip,          // flip inputs[0] by param (inverse direction)
    Intersect        // inputs[0] ∩ inputs[1]
  };
  Op op;
  std::string rule;  // postulate tag, e.g. "R_F"
  Interp param{};
  int width = 0;  // Adjoin: original atom count (fresh bits start here)
  std::vector<ModelSet> inputs;
  ModelSet output;
};

ModelSet replayStep(const TraceStep& step);

// The postulate recipe as a flat, ordered step list. `final` equals the
// corresponding operator's result. sig == extendedSig unless adjunction
// atoms were minted (surprise recipes).
struct DerivationTrace {
  OperatorKind kind = OperatorKind::DalalMinMin;
  Signature sig;
  Signature extendedSig;
  std::optional<AdjunctionSet> adj;
  std::vector<TraceStep> steps;
  ModelSet final;
};

DerivationTrace explain(OperatorKind k, const ModelSet& phi,
                        const ModelSet& mu, const Signature& sig);
DerivationTrace explain(OperatorKind k, const Formula& phi, const Formula& mu,
                        const Signature& sig);

}  // namespace rev
