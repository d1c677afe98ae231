#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rev/logic.hpp"

namespace rev {

enum class Conn : std::uint8_t { True, False, Atom, Not, And, Or, Implies, Iff };

// Immutable propositional formula; cheap to copy (nodes are shared).
// Atoms carry names and are resolved against a signature at evaluation time.
class Formula {
 public:
  Formula() : Formula(constant(false)) {}

  static Formula atom(std::string name);
  static Formula constant(bool value);
  static Formula negation(Formula f);
  static Formula conjunction(Formula l, Formula r);
  static Formula disjunction(Formula l, Formula r);
  static Formula implication(Formula l, Formula r);
  static Formula equivalence(Formula l, Formula r);

  Conn kind() const { return node_->kind; }
  const std::string& atomName() const { return node_->name; }
  Formula left() const { return Formula(node_->l); }
  Formula right() const { return Formula(node_->r); }

  // Structural equality (same shape and atom names).
  bool sameAst(const Formula& other) const;

 private:
  struct Node {
    Conn kind;
    std::string name;
    std::shared_ptr<const Node> l, r;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Grammar: atoms [A-Za-z][A-Za-z0-9_]*, '!' or '~', '&', '|', '->', '<->',
// 'true', 'false', parentheses. Precedence ! > & > | > -> > <->, with '->'
// and '<->' right-associative. Atoms must belong to `sig` and must not use
// the reserved fresh-atom prefix.
Formula parse(std::string_view text, const Signature& sig);

// Lexes `text` and returns the atom tokens in order of first occurrence
// (duplicates removed). Used to derive default signatures for the CLI.
std::vector<std::string> atomsInText(std::string_view text);

// Minimal-parentheses rendering; parse(printFormula(f)) reproduces the AST.
std::string printFormula(const Formula& f);

bool evaluate(const Formula& f, const Signature& sig, Interp w);

// Exactly the satisfying assignments among all 2^|sig| interpretations.
ModelSet models(const Formula& f, const Signature& sig);

// Canonical full DNF: one complete minterm per model, minterms in canonical
// model order, literals in signature order; the empty set yields ⊥.
Formula formulaFromModels(const ModelSet& m, const Signature& sig);

bool entails(const Formula& f, const Formula& g, const Signature& sig);
bool equivalent(const Formula& f, const Formula& g, const Signature& sig);
bool isConsistent(const Formula& f, const Signature& sig);
bool isComplete(const Formula& f, const Signature& sig);

// Every atom occurrence p replaced by !p; [dual(f)] = { A\v : v in [f] }.
Formula dual(const Formula& f);

Formula renameFormula(const Renaming& r, const Signature& sig,
                      const Formula& f);

// All atoms of v occurring in f are negated; [flipFormula(v,f)] = flipSet(v,[f]).
Formula flipFormula(const Signature& sig, Interp v, const Formula& f);

// The null and full formulas: [epsilon] = {∅}, [alpha] = {A}.
Formula epsilon(const Signature& sig);
Formula alpha(const Signature& sig);

}  // namespace rev
