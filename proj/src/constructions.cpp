/* The beta/gamma/sigma constructions and the recipe traces.
 *
 * The inner epsilon- and alpha-revisions are evaluated directly as
 * minimal-cardinality / maximal-cardinality selections: any operator
 * satisfying the base postulates behaves that way on complete priors, which
 * breaks the apparent self-reference in the definitions.
 *
 * gamma and sigma aggregate per model of mu: flipping the prior rows by w
 * turns the w-column of the distance table into cardinalities, the
 * alpha-selection picks the worst rows for w, and keeping one canonical
 * witness per w lets a single epsilon-selection find the argmin-max models.
 * The recovery postulates invert each witness's own flip, so the recovered
 * set is exactly the operator result on every instance.
 */
#include "rev/constructions.hpp"

#include <algorithm>

namespace rev {

namespace {

void requireNonempty(const ModelSet& phi, const ModelSet& mu) {
  if (phi.empty() || mu.empty())
    throw EmptyOperandError("constructions need nonempty operands");
}

ModelSet minCardSelect(const ModelSet& m) {
  int best = Signature::kMaxAtoms + 1;
  for (Interp u : m) best = std::min(best, cardinality(u));
  std::vector<Interp> out;
  for (Interp u : m)
    if (cardinality(u) == best) out.push_back(u);
  return ModelSet(std::move(out));
}

ModelSet maxCardSelect(const ModelSet& m) {
  int best = -1;
  for (Interp u : m) best = std::max(best, cardinality(u));
  std::vector<Interp> out;
  for (Interp u : m)
    if (cardinality(u) == best) out.push_back(u);
  return ModelSet(std::move(out));
}

// First row (in the given order) at maximal distance from w.
Interp canonicalWitnessRow(std::span<const Interp> rows, Interp w) {
  Interp best = rows[0];
  int bestDist = hamming(rows[0], w);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    int d = hamming(rows[i], w);
    if (d > bestDist) {
      best = rows[i];
      bestDist = d;
    }
  }
  return best;
}

// Shared core of gamma and sigmaConstruct: rows are the (possibly corrected)
// prior models in canonical prior order.
ModelSet bestOfWorst(std::span<const Interp> rows, const ModelSet& mu) {
  std::vector<Interp> pool;
  pool.reserve(mu.size());
  for (Interp w : mu) pool.push_back(symDiff(w, canonicalWitnessRow(rows, w)));
  return minCardSelect(ModelSet(std::move(pool)));
}

ModelSet recoverFromWitnesses(std::span<const Interp> rows,
                              const ModelSet& witnesses, const ModelSet& mu) {
  std::vector<Interp> out;
  for (Interp w : mu)
    if (witnesses.contains(symDiff(w, canonicalWitnessRow(rows, w))))
      out.push_back(w);
  return ModelSet(std::move(out));
}

std::vector<Interp> starredRows(const AdjunctionSet& adj) {
  std::vector<Interp> rows;
  rows.reserve(adj.priorModels.size());
  for (const auto& c : corrected(adj)) rows.push_back(c.starred);
  return rows;
}

}  // namespace

AdjunctionSet adjunction(const ModelSet& phi, const ModelSet& mu,
                         const Signature& sig) {
  requireNonempty(phi, mu);
  AdjunctionSet adj;
  adj.originalAtoms = sig.size();
  adj.priorModels.assign(phi.begin(), phi.end());
  int total = 0;
  std::vector<int> sizes;
  sizes.reserve(phi.size());
  for (Interp v : phi) {
    if (!sig.covers(v))
      throw SignatureError("model outside the signature's universe");
    int m = minDist(v, mu);
    sizes.push_back(m);
    total += m;
  }
  adj.extendedSig = sig.extended(total);
  int offset = sig.size();
  for (int m : sizes) {
    Mask bits = m == 0 ? 0 : ((Mask{1} << m) - 1) << offset;
    adj.freshSets.push_back({bits});
    offset += m;
  }
  return adj;
}

std::vector<CorrectedInterpretation> corrected(const AdjunctionSet& adj) {
  Mask all = 0;
  for (Interp x : adj.freshSets) all |= x.bits;
  std::vector<CorrectedInterpretation> out;
  out.reserve(adj.priorModels.size());
  for (std::size_t i = 0; i < adj.priorModels.size(); ++i) {
    Interp v = adj.priorModels[i];
    out.push_back({v, {v.bits | (all ^ adj.freshSets[i].bits)}});
  }
  return out;
}

ModelSet beta(const ModelSet& phi, const ModelSet& mu) {
  requireNonempty(phi, mu);
  std::vector<Interp> pool;
  pool.reserve(static_cast<std::size_t>(phi.size()) * mu.size());
  for (Interp v : phi)
    for (Interp w : mu) pool.push_back(symDiff(w, v));
  return minCardSelect(ModelSet(std::move(pool)));
}

ModelSet recoverBoB(const ModelSet& phi, const ModelSet& betaModels,
                    const ModelSet& mu) {
  ModelSet flips;
  for (Interp v : phi) flips = setUnion(flips, flipSet(v, betaModels));
  return setIntersection(flips, mu);
}

ModelSet gamma(const ModelSet& phi, const ModelSet& mu) {
  requireNonempty(phi, mu);
  return bestOfWorst(phi.models(), mu);
}

ModelSet recoverBoW(const ModelSet& phi, const ModelSet& gammaModels,
                    const ModelSet& mu) {
  if (phi.empty() || mu.empty()) return ModelSet{};
  return recoverFromWitnesses(phi.models(), gammaModels, mu);
}

ModelSet sigmaConstruct(const ModelSet& phi, const ModelSet& mu,
                        const Signature& sig) {
  requireNonempty(phi, mu);
  AdjunctionSet adj = adjunction(phi, mu, sig);
  return bestOfWorst(starredRows(adj), mu);
}

ModelSet recoverBoWS(const ModelSet& phi, const ModelSet& sigmaModels,
                     const ModelSet& mu, const AdjunctionSet& adj) {
  if (phi.empty() || mu.empty()) return ModelSet{};
  return recoverFromWitnesses(starredRows(adj), sigmaModels, mu);
}

ModelSet beta(const Formula& phi, const Formula& mu, const Signature& sig) {
  return beta(models(phi, sig), models(mu, sig));
}

ModelSet gamma(const Formula& phi, const Formula& mu, const Signature& sig) {
  return gamma(models(phi, sig), models(mu, sig));
}

ModelSet sigmaConstruct(const Formula& phi, const Formula& mu,
                        const Signature& sig) {
  return sigmaConstruct(models(phi, sig), models(mu, sig), sig);
}

ModelSet replayStep(const TraceStep& step) {
  switch (step.op) {
    case TraceStep::Op::Consider:
      return step.inputs.at(0);
    case TraceStep::Op::Adjoin: {
      // Recompute the corrected prior from scratch: |x_i| = minDist(v_i, mu),
      // fresh bits packed above `width` in row order.
      const ModelSet& phi = step.inputs.at(0);
      const ModelSet& mu = step.inputs.at(1);
      std::vector<Mask> fresh;
      int offset = step.width;
      Mask all = 0;
      for (Interp v : phi) {
        int m = minDist(v, mu);
        Mask bits = m == 0 ? 0 : ((Mask{1} << m) - 1) << offset;
        fresh.push_back(bits);
        all |= bits;
        offset += m;
      }
      std::vector<Interp> starred;
      for (int i = 0; i < phi.size(); ++i)
        starred.push_back({phi[i].bits | (all ^ fresh[i])});
      return ModelSet(std::move(starred));
    }
    case TraceStep::Op::Flip:
    case TraceStep::Op::Unflip:
      return flipSet(step.param, step.inputs.at(0));
    case TraceStep::Op::SelectMinCard:
      return minCardSelect(step.inputs.at(0));
    case TraceStep::Op::SelectNearFull:
      return maxCardSelect(step.inputs.at(0));
    case TraceStep::Op::CollectWitness: {
      std::vector<Interp> rows;
      rows.reserve(step.inputs.size());
      for (const ModelSet& s : step.inputs) rows.push_back(s[0]);
      Interp u = symDiff(step.param, canonicalWitnessRow(rows, step.param));
      return ModelSet({std::vector<Interp>{u}});
    }
    case TraceStep::Op::Union: {
      ModelSet out;
      for (const ModelSet& m : step.inputs) out = setUnion(out, m);
      return out;
    }
    case TraceStep::Op::Intersect:
      return setIntersection(step.inputs.at(0), step.inputs.at(1));
  }
  return ModelSet{};
}

namespace {

TraceStep makeStep(TraceStep::Op op, std::string rule,
                   std::vector<ModelSet> inputs, Interp param = {}) {
  TraceStep s;
  s.op = op;
  s.rule = std::move(rule);
  s.param = param;
  s.inputs = std::move(inputs);
  s.output = replayStep(s);
  return s;
}

TraceStep makeAdjoinStep(const ModelSet& phi, const ModelSet& mu, int width) {
  TraceStep s;
  s.op = TraceStep::Op::Adjoin;
  s.rule = "R_A";
  s.width = width;
  s.inputs = {phi, mu};
  s.output = replayStep(s);
  return s;
}

DerivationTrace explainBoB(const ModelSet& phi, const ModelSet& mu,
                           const Signature& sig) {
  DerivationTrace t;
  t.kind = OperatorKind::DalalMinMin;
  t.sig = sig;
  t.extendedSig = sig;
  t.steps.push_back(makeStep(TraceStep::Op::Consider, "R_4", {phi}));
  std::vector<ModelSet> flipped;
  for (Interp v : phi) {
    t.steps.push_back(makeStep(TraceStep::Op::Flip, "R_F", {mu}, v));
    flipped.push_back(t.steps.back().output);
  }
  t.steps.push_back(makeStep(TraceStep::Op::Union, "R_BoB", flipped));
  t.steps.push_back(makeStep(TraceStep::Op::SelectMinCard, "R_N+R_A",
                             {t.steps.back().output}));
  ModelSet betaModels = t.steps.back().output;
  std::vector<ModelSet> unflipped;
  for (Interp v : phi) {
    t.steps.push_back(makeStep(TraceStep::Op::Unflip, "R_F", {betaModels}, v));
    unflipped.push_back(t.steps.back().output);
  }
  t.steps.push_back(makeStep(TraceStep::Op::Union, "R_BoB", unflipped));
  t.steps.push_back(
      makeStep(TraceStep::Op::Intersect, "R_BoB", {t.steps.back().output, mu}));
  t.final = t.steps.back().output;
  return t;
}

DerivationTrace explainBestOfWorst(OperatorKind kind, const ModelSet& phi,
                                   const ModelSet& mu, const Signature& sig) {
  DerivationTrace t;
  t.kind = kind;
  t.sig = sig;
  t.extendedSig = sig;
  const std::string recoverTag =
      kind == OperatorKind::SurpriseMinMax ? "R_BoWS" : "R_BoW";

  std::vector<Interp> rows(phi.begin(), phi.end());
  if (kind == OperatorKind::SurpriseMinMax) {
    t.adj = adjunction(phi, mu, sig);
    t.extendedSig = t.adj->extendedSig;
    rows = starredRows(*t.adj);
    t.steps.push_back(makeAdjoinStep(phi, mu, sig.size()));
  } else {
    t.steps.push_back(makeStep(TraceStep::Op::Consider, "R_4", {phi}));
  }
  const ModelSet rowSet{std::vector<Interp>(rows)};
  std::vector<ModelSet> rowSingletons;
  rowSingletons.reserve(rows.size());
  for (Interp v : rows) rowSingletons.push_back(ModelSet(std::vector<Interp>{v}));

  std::vector<ModelSet> witnesses;
  for (Interp w : mu) {
    t.steps.push_back(makeStep(TraceStep::Op::Flip, "R_F", {rowSet}, w));
    t.steps.push_back(makeStep(TraceStep::Op::SelectNearFull, "R_N+R_A",
                               {t.steps.back().output}));
    t.steps.push_back(
        makeStep(TraceStep::Op::CollectWitness, recoverTag, rowSingletons, w));
    witnesses.push_back(t.steps.back().output);
  }
  t.steps.push_back(makeStep(TraceStep::Op::Union, recoverTag, witnesses));
  t.steps.push_back(makeStep(TraceStep::Op::SelectMinCard, "R_N+R_A",
                             {t.steps.back().output}));
  const ModelSet selected = t.steps.back().output;

  std::vector<ModelSet> recovered;
  for (Interp w : mu) {
    Interp vstar = canonicalWitnessRow(rows, w);
    Interp u = symDiff(w, vstar);
    if (!selected.contains(u)) continue;
    t.steps.push_back(makeStep(TraceStep::Op::Unflip, "R_F",
                               {ModelSet({std::vector<Interp>{u}})}, vstar));
    recovered.push_back(t.steps.back().output);
  }
  t.steps.push_back(makeStep(TraceStep::Op::Union, recoverTag, recovered));
  t.steps.push_back(
      makeStep(TraceStep::Op::Intersect, recoverTag, {t.steps.back().output, mu}));
  t.final = t.steps.back().output;
  return t;
}

}  // namespace

DerivationTrace explain(OperatorKind k, const ModelSet& phi,
                        const ModelSet& mu, const Signature& sig) {
  requireNonempty(phi, mu);
  if (k == OperatorKind::DalalMinMin) return explainBoB(phi, mu, sig);
  return explainBestOfWorst(k, phi, mu, sig);
}

DerivationTrace explain(OperatorKind k, const Formula& phi, const Formula& mu,
                        const Signature& sig) {
  return explain(k, models(phi, sig), models(mu, sig), sig);
}

}  // namespace rev
