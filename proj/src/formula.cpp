#include "rev/formula.hpp"

#include <algorithm>

namespace rev {

Formula Formula::atom(std::string name) {
  return Formula(std::make_shared<Node>(Node{Conn::Atom, std::move(name), {}, {}}));
}

Formula Formula::constant(bool value) {
  static const auto t = std::make_shared<Node>(Node{Conn::True, {}, {}, {}});
  static const auto f = std::make_shared<Node>(Node{Conn::False, {}, {}, {}});
  return Formula(value ? t : f);
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<Node>(Node{Conn::Not, {}, f.node_, {}}));
}

Formula Formula::conjunction(Formula l, Formula r) {
  return Formula(std::make_shared<Formula::Node>(
      Formula::Node{Conn::And, {}, l.node_, r.node_}));
}

Formula Formula::disjunction(Formula l, Formula r) {
  return Formula(std::make_shared<Formula::Node>(
      Formula::Node{Conn::Or, {}, l.node_, r.node_}));
}

Formula Formula::implication(Formula l, Formula r) {
  return Formula(std::make_shared<Formula::Node>(
      Formula::Node{Conn::Implies, {}, l.node_, r.node_}));
}

Formula Formula::equivalence(Formula l, Formula r) {
  return Formula(std::make_shared<Formula::Node>(
      Formula::Node{Conn::Iff, {}, l.node_, r.node_}));
}

bool Formula::sameAst(const Formula& other) const {
  const Node* a = node_.get();
  const Node* b = other.node_.get();
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Conn::True:
    case Conn::False:
      return true;
    case Conn::Atom:
      return a->name == b->name;
    case Conn::Not:
      return left().sameAst(other.left());
    default:
      return left().sameAst(other.left()) && right().sameAst(other.right());
  }
}

bool evaluate(const Formula& f, const Signature& sig, Interp w) {
  switch (f.kind()) {
    case Conn::True:
      return true;
    case Conn::False:
      return false;
    case Conn::Atom: {
      auto i = sig.indexOf(f.atomName());
      if (!i) throw UnknownAtomError(f.atomName(), 0);
      return w.bits >> *i & 1;
    }
    case Conn::Not:
      return !evaluate(f.left(), sig, w);
    case Conn::And:
      return evaluate(f.left(), sig, w) && evaluate(f.right(), sig, w);
    case Conn::Or:
      return evaluate(f.left(), sig, w) || evaluate(f.right(), sig, w);
    case Conn::Implies:
      return !evaluate(f.left(), sig, w) || evaluate(f.right(), sig, w);
    case Conn::Iff:
      return evaluate(f.left(), sig, w) == evaluate(f.right(), sig, w);
  }
  return false;
}

ModelSet models(const Formula& f, const Signature& sig) {
  if (sig.size() > Signature::kMaxEnumAtoms)
    throw LimitError("model enumeration capped at " +
                     std::to_string(Signature::kMaxEnumAtoms) + " atoms");
  std::vector<Interp> out;
  const Mask end = Mask{1} << sig.size();
  for (Mask m = 0; m < end; ++m)
    if (evaluate(f, sig, {m})) out.push_back({m});
  return ModelSet(std::move(out));
}

Formula formulaFromModels(const ModelSet& m, const Signature& sig) {
  if (m.empty()) return Formula::constant(false);
  auto minterm = [&](Interp w) {
    if (!sig.covers(w))
      throw SignatureError("model outside the signature's universe");
    Formula acc;
    for (int i = 0; i < sig.size(); ++i) {
      Formula lit = (w.bits >> i & 1)
                        ? Formula::atom(sig.atom(i))
                        : Formula::negation(Formula::atom(sig.atom(i)));
      acc = (i == 0) ? lit : Formula::conjunction(acc, lit);
    }
    return acc;
  };
  Formula out;
  bool first = true;
  for (Interp w : m) {
    Formula t = minterm(w);
    out = first ? t : Formula::disjunction(out, t);
    first = false;
  }
  return out;
}

bool entails(const Formula& f, const Formula& g, const Signature& sig) {
  return models(f, sig).subsetOf(models(g, sig));
}

bool equivalent(const Formula& f, const Formula& g, const Signature& sig) {
  return models(f, sig) == models(g, sig);
}

bool isConsistent(const Formula& f, const Signature& sig) {
  return !models(f, sig).empty();
}

bool isComplete(const Formula& f, const Signature& sig) {
  return models(f, sig).size() == 1;
}

Formula dual(const Formula& f) {
  switch (f.kind()) {
    case Conn::True:
    case Conn::False:
      return f;
    case Conn::Atom:
      return Formula::negation(f);
    case Conn::Not:
      return Formula::negation(dual(f.left()));
    case Conn::And:
      return Formula::conjunction(dual(f.left()), dual(f.right()));
    case Conn::Or:
      return Formula::disjunction(dual(f.left()), dual(f.right()));
    case Conn::Implies:
      return Formula::implication(dual(f.left()), dual(f.right()));
    case Conn::Iff:
      return Formula::equivalence(dual(f.left()), dual(f.right()));
  }
  return f;
}

Formula renameFormula(const Renaming& r, const Signature& sig,
                      const Formula& f) {
  switch (f.kind()) {
    case Conn::True:
    case Conn::False:
      return f;
    case Conn::Atom: {
      auto i = sig.indexOf(f.atomName());
      if (!i) throw UnknownAtomError(f.atomName(), 0);
      return Formula::atom(sig.atom(r.imageOf(*i)));
    }
    case Conn::Not:
      return Formula::negation(renameFormula(r, sig, f.left()));
    case Conn::And:
      return Formula::conjunction(renameFormula(r, sig, f.left()),
                                  renameFormula(r, sig, f.right()));
    case Conn::Or:
      return Formula::disjunction(renameFormula(r, sig, f.left()),
                                  renameFormula(r, sig, f.right()));
    case Conn::Implies:
      return Formula::implication(renameFormula(r, sig, f.left()),
                                  renameFormula(r, sig, f.right()));
    case Conn::Iff:
      return Formula::equivalence(renameFormula(r, sig, f.left()),
                                  renameFormula(r, sig, f.right()));
  }
  return f;
}

Formula flipFormula(const Signature& sig, Interp v, const Formula& f) {
  switch (f.kind()) {
    case Conn::True:
    case Conn::False:
      return f;
    case Conn::Atom: {
      auto i = sig.indexOf(f.atomName());
      if (!i) throw UnknownAtomError(f.atomName(), 0);
      return (v.bits >> *i & 1) ? Formula::negation(f) : f;
    }
    case Conn::Not:
      return Formula::negation(flipFormula(sig, v, f.left()));
    case Conn::And:
      return Formula::conjunction(flipFormula(sig, v, f.left()),
                                  flipFormula(sig, v, f.right()));
    case Conn::Or:
      return Formula::disjunction(flipFormula(sig, v, f.left()),
                                  flipFormula(sig, v, f.right()));
    case Conn::Implies:
      return Formula::implication(flipFormula(sig, v, f.left()),
                                  flipFormula(sig, v, f.right()));
    case Conn::Iff:
      return Formula::equivalence(flipFormula(sig, v, f.left()),
                                  flipFormula(sig, v, f.right()));
  }
  return f;
}

Formula epsilon(const Signature& sig) {
  if (sig.size() == 0) return Formula::constant(true);
  Formula acc;
  for (int i = 0; i < sig.size(); ++i) {
    Formula lit = Formula::negation(Formula::atom(sig.atom(i)));
    acc = (i == 0) ? lit : Formula::conjunction(acc, lit);
  }
  return acc;
}

Formula alpha(const Signature& sig) {
  if (sig.size() == 0) return Formula::constant(true);
  Formula acc;
  for (int i = 0; i < sig.size(); ++i) {
    Formula lit = Formula::atom(sig.atom(i));
    acc = (i == 0) ? lit : Formula::conjunction(acc, lit);
  }
  return acc;
}

}  // namespace rev
