#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rev/errors.hpp"

namespace rev {

using Mask = std::uint64_t;

// A truth-value assignment, identified with the set of atoms it makes true.
// Bit i corresponds to atom i of the ambient Signature; all operations that
// combine interpretations assume they share that signature.
struct Interp {
  Mask bits = 0;
  friend constexpr auto operator<=>(const Interp&, const Interp&) = default;
};

constexpr Interp symDiff(Interp v, Interp w) { return {v.bits ^ w.bits}; }

// f_v(w) = w (triangle) v.
constexpr Interp flipInterp(Interp v, Interp w) { return {w.bits ^ v.bits}; }

inline int cardinality(Interp v) { return std::popcount(v.bits); }

// An ordered, finite universe of atom names. Order is total and stable: it
// fixes bit positions, display order and every canonical ordering downstream.
class Signature {
 public:
  static constexpr int kMaxAtoms = 64;      // interpretations are 64-bit sets
  static constexpr int kMaxEnumAtoms = 24;  // cap for full model enumeration

  Signature() = default;
  explicit Signature(std::vector<std::string> atoms,
                     std::string reservedPrefix = "_x");

  // Convenience: the first n letters a, b, c, ... (n <= 26).
  static Signature letters(int n);

  int size() const { return static_cast<int>(atoms_.size()); }
  const std::string& atom(int i) const { return atoms_[i]; }
  std::span<const std::string> atoms() const { return atoms_; }
  std::optional<int> indexOf(std::string_view name) const;
  const std::string& reservedPrefix() const { return reserved_prefix_; }
  bool isReserved(std::string_view name) const;

  Mask universeBits() const {
    return size() == kMaxAtoms ? ~Mask{0} : (Mask{1} << size()) - 1;
  }
  Interp allTrue() const { return {universeBits()}; }
  bool covers(Interp v) const { return (v.bits & ~universeBits()) == 0; }

  // Returns a copy with `count` fresh atoms (reservedPrefix + counter)
  // appended, continuing any previously minted numbering.
  Signature extended(int count) const;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.atoms_ == b.atoms_ && a.reserved_prefix_ == b.reserved_prefix_;
  }

 private:
  std::vector<std::string> atoms_;
  std::string reserved_prefix_ = "_x";
  std::unordered_map<std::string, int> index_;
  int minted_ = 0;

  void rebuildIndex();
};

// A set of interpretations over a shared signature. Models are kept sorted
// by ascending mask value ({∅, abcd, abe}); this is the canonical order for
// display, table rows and columns, DNF minterms and adjunction rows.
class ModelSet {
 public:
  ModelSet() = default;
  explicit ModelSet(std::vector<Interp> models);

  static ModelSet ofMasks(std::initializer_list<Mask> masks);

  bool empty() const { return models_.size() == 0; }
  int size() const { return static_cast<int>(models_.size()); }
  std::span<const Interp> models() const { return models_; }
  Interp operator[](int i) const { return models_[i]; }
  bool contains(Interp v) const;
  void insert(Interp v);

  bool subsetOf(const ModelSet& other) const;
  friend bool operator==(const ModelSet&, const ModelSet&) = default;

  auto begin() const { return models_.begin(); }
  auto end() const { return models_.end(); }

 private:
  std::vector<Interp> models_;
};

ModelSet setUnion(const ModelSet& a, const ModelSet& b);
ModelSet setIntersection(const ModelSet& a, const ModelSet& b);

// All 2^n interpretations of the signature; throws LimitError past the
// enumeration cap.
ModelSet universe(const Signature& sig);

// {w (triangle) v : w in m}
ModelSet flipSet(Interp v, const ModelSet& m);

// {A \ w : w in m}
ModelSet dualSet(const Signature& sig, const ModelSet& m);

// A bijection on the atom positions of a signature.
class Renaming {
 public:
  static Renaming identity(int n);
  // perm[i] is the image position of atom i; must be a permutation.
  static Renaming ofPermutation(std::vector<int> perm);
  // Pairs (from, to); atoms not mentioned map to themselves. The resulting
  // total map must be bijective.
  static Renaming ofMap(
      const Signature& sig,
      const std::vector<std::pair<std::string, std::string>>& pairs);

  int size() const { return static_cast<int>(perm_.size()); }
  int imageOf(int atomIndex) const { return perm_[atomIndex]; }
  Interp apply(Interp v) const;
  Renaming inverse() const;

 private:
  explicit Renaming(std::vector<int> perm) : perm_(std::move(perm)) {}
  std::vector<int> perm_;
};

ModelSet renameSet(const Renaming& r, const ModelSet& m);

// Word display in signature order: {a,c} -> "ac"; empty set -> "∅" ("{}"
// in ascii mode).
std::string toWord(const Signature& sig, Interp v, bool ascii = false);

// "{∅, abcd, abe}"
std::string toWords(const Signature& sig, const ModelSet& m, bool ascii = false);

}  // namespace rev
