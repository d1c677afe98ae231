#include "rev/serialize.hpp"

namespace rev {

namespace {

const char* tableKindName(TableKind k) {
  return k == TableKind::Distance ? "distance" : "surprise";
}

Json stepOpName(TraceStep::Op op) {
  switch (op) {
    case TraceStep::Op::Consider: return "consider";
    case TraceStep::Op::Adjoin: return "adjoin";
    case TraceStep::Op::Flip: return "flip";
    case TraceStep::Op::SelectMinCard: return "select-min-cardinality";
    case TraceStep::Op::SelectNearFull: return "select-near-full";
    case TraceStep::Op::CollectWitness: return "collect-witness";
    case TraceStep::Op::Union: return "union";
    case TraceStep::Op::Unflip: return "unflip";
    case TraceStep::Op::Intersect: return "intersect";
  }
  return "?";
}

}  // namespace

Json toJson(const Signature& sig, Interp v) {
  Json atoms = Json::array();
  for (int i = 0; i < sig.size(); ++i)
    if (v.bits >> i & 1) atoms.push_back(sig.atom(i));
  return atoms;
}

Json toJson(const Signature& sig, const ModelSet& m) {
  Json out = Json::array();
  for (Interp w : m) out.push_back(toJson(sig, w));
  return out;
}

Json toJson(const Signature& sig, const DistanceTable& t) {
  Json out;
  out["kind"] = tableKindName(t.kind);
  out["rows"] = Json::array();
  for (Interp v : t.rows) out["rows"].push_back(toJson(sig, v));
  out["cols"] = Json::array();
  for (Interp w : t.cols) out["cols"].push_back(toJson(sig, w));
  out["cells"] = t.cells;
  if (t.kind == TableKind::Surprise) {
    out["rawDistances"] = t.raw;
    out["rowReference"] = t.rowRef;
  }
  out["aggregates"] = Json{{"min", t.colMin}, {"max", t.colMax}};
  return out;
}

Json toJson(const Signature& sig, const RevisionResult& r, OperatorKind k) {
  Json out;
  out["op"] = std::string(operatorName(k));
  out["signature"] = sig.atoms();
  out["result"] = Json{{"models", toJson(sig, r.resultModels)},
                       {"formula", printFormula(r.resultFormula)}};
  Json scores = Json::array();
  for (const auto& [w, s] : r.scorePerModel)
    scores.push_back(Json{{"model", toJson(sig, w)}, {"score", s}});
  out["scores"] = scores;
  out["degeneratePrior"] = r.degeneratePrior;
  if (r.table) out["table"] = toJson(sig, *r.table);
  return out;
}

Json toJson(const DerivationTrace& t) {
  const Signature& ext = t.extendedSig;
  Json out;
  out["op"] = std::string(operatorName(t.kind));
  out["signature"] = t.sig.atoms();
  if (!(t.extendedSig == t.sig)) out["extendedSignature"] = ext.atoms();
  if (t.adj) {
    Json adj = Json::array();
    for (std::size_t i = 0; i < t.adj->priorModels.size(); ++i)
      adj.push_back(Json{{"model", toJson(ext, t.adj->priorModels[i])},
                         {"fresh", toJson(ext, t.adj->freshSets[i])}});
    out["adjunction"] = adj;
  }
  Json steps = Json::array();
  int index = 1;
  for (const TraceStep& s : t.steps) {
    Json step;
    step["index"] = index++;
    step["rule"] = s.rule;
    step["op"] = stepOpName(s.op);
    if (s.op == TraceStep::Op::Flip || s.op == TraceStep::Op::Unflip ||
        s.op == TraceStep::Op::CollectWitness)
      step["param"] = toJson(ext, s.param);
    Json inputs = Json::array();
    for (const ModelSet& m : s.inputs) inputs.push_back(toJson(ext, m));
    step["inputs"] = inputs;
    step["output"] = toJson(ext, s.output);
    steps.push_back(step);
  }
  out["steps"] = steps;
  out["final"] = toJson(ext, t.final);
  return out;
}

Json toJson(const Signature& sig, const Counterexample& c) {
  Json out;
  out["postulate"] = std::string(postulateName(c.postulate));
  out["op"] = std::string(operatorName(c.op));
  Json inst;
  inst["phi"] = toJson(sig, c.instance.phi);
  inst["mu"] = toJson(sig, c.instance.mu);
  if (c.instance.mu2) inst["mu2"] = toJson(sig, *c.instance.mu2);
  if (c.instance.renaming) {
    Json ren = Json::array();
    for (int i = 0; i < sig.size(); ++i)
      ren.push_back(sig.atom(c.instance.renaming->imageOf(i)));
    inst["renaming"] = ren;
  }
  if (c.instance.flip) inst["flip"] = toJson(sig, *c.instance.flip);
  if (c.instance.raFirst) inst["kept"] = toJson(sig, *c.instance.raFirst);
  if (c.instance.freshAtoms > 0) inst["freshAtoms"] = c.instance.freshAtoms;
  out["instance"] = inst;
  // RA counterexamples mention fresh atoms; serialize sides over the
  // extension when needed.
  Signature wide = c.instance.freshAtoms > 0
                       ? sig.extended(c.instance.freshAtoms)
                       : sig;
  out["lhs"] = toJson(wide, c.lhs);
  out["rhs"] = toJson(wide, c.rhs);
  return out;
}

Json toJson(const CheckReport& r) {
  Json out;
  out["op"] = std::string(operatorName(r.op));
  out["atoms"] = r.signatureSize;
  Json per = Json::object();
  Signature sig = Signature::letters(r.signatureSize);
  for (const auto& [p, o] : r.perPostulate) {
    Json entry;
    entry["status"] = o.pass ? "PASS" : "FAIL";
    entry["instances"] = o.instances;
    entry["violations"] = o.violations;
    entry["excludedDegenerate"] = o.excludedDegenerate;
    entry["exhaustive"] = o.exhaustive;
    if (o.sampled) entry["sampled"] = true;
    if (o.first) entry["counterexample"] = toJson(sig, *o.first);
    per[std::string(postulateName(p))] = entry;
  }
  out["perPostulate"] = per;
  return out;
}

Json toJson(const MatrixReport& r) {
  Json out;
  out["atoms"] = r.n;
  Json cells = Json::array();
  for (const MatrixCell& c : r.cells) {
    Json cell;
    cell["op"] = std::string(operatorName(c.op));
    cell["postulate"] = std::string(postulateName(c.postulate));
    cell["atoms"] = c.atoms;
    cell["status"] = c.outcome.pass ? "PASS" : "FAIL";
    cell["expected"] = c.expected == Expected::Pass ? "PASS" : "FAIL";
    cell["matches"] = c.matches;
    cell["instances"] = c.outcome.instances;
    if (c.outcome.first)
      cell["counterexample"] = toJson(Signature::letters(c.atoms), *c.outcome.first);
    cells.push_back(cell);
  }
  out["cells"] = cells;
  out["matchesExpected"] = r.matchesExpected;
  return out;
}

}  // namespace rev
