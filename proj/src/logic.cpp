#include "rev/logic.hpp"

#include <algorithm>
#include <cctype>

namespace rev {

namespace {

bool validAtomName(std::string_view name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace

Signature::Signature(std::vector<std::string> atoms, std::string reservedPrefix)
    : atoms_(std::move(atoms)), reserved_prefix_(std::move(reservedPrefix)) {
  if (reserved_prefix_.empty())
    throw SignatureError("reserved prefix must be nonempty");
  if (size() > kMaxAtoms)
    throw SignatureError("signature exceeds " + std::to_string(kMaxAtoms) +
                         " atoms");
  for (const auto& a : atoms_) {
    if (!validAtomName(a))
      throw SignatureError("invalid atom name '" + a + "'");
    if (a.compare(0, reserved_prefix_.size(), reserved_prefix_) == 0)
      throw SignatureError("atom '" + a + "' uses the reserved prefix '" +
                           reserved_prefix_ + "'");
  }
  rebuildIndex();
  if (static_cast<int>(index_.size()) != size())
    throw SignatureError("duplicate atom in signature");
}

Signature Signature::letters(int n) {
  if (n < 0 || n > 26) throw SignatureError("letters(n) needs 0 <= n <= 26");
  std::vector<std::string> atoms;
  atoms.reserve(n);
  for (int i = 0; i < n; ++i) atoms.emplace_back(1, static_cast<char>('a' + i));
  return Signature(std::move(atoms));
}

void Signature::rebuildIndex() {
  index_.clear();
  index_.reserve(atoms_.size());
  for (int i = 0; i < size(); ++i) index_.emplace(atoms_[i], i);
}

std::optional<int> Signature::indexOf(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Signature::isReserved(std::string_view name) const {
  return name.substr(0, reserved_prefix_.size()) == reserved_prefix_;
}

Signature Signature::extended(int count) const {
  if (count < 0) throw SignatureError("extended(count) needs count >= 0");
  if (size() + count > kMaxAtoms)
    throw LimitError("extending the signature past " +
                     std::to_string(kMaxAtoms) + " atoms");
  Signature out = *this;
  for (int i = 0; i < count; ++i) {
    out.atoms_.push_back(reserved_prefix_ + std::to_string(out.minted_));
    ++out.minted_;
  }
  out.rebuildIndex();
  return out;
}

ModelSet::ModelSet(std::vector<Interp> models) : models_(std::move(models)) {
  std::sort(models_.begin(), models_.end());
  models_.erase(std::unique(models_.begin(), models_.end()), models_.end());
}

ModelSet ModelSet::ofMasks(std::initializer_list<Mask> masks) {
  std::vector<Interp> v;
  v.reserve(masks.size());
  for (Mask m : masks) v.push_back({m});
  return ModelSet(std::move(v));
}

bool ModelSet::contains(Interp v) const {
  return std::binary_search(models_.begin(), models_.end(), v);
}

void ModelSet::insert(Interp v) {
  auto it = std::lower_bound(models_.begin(), models_.end(), v);
  if (it == models_.end() || *it != v) models_.insert(it, v);
}

bool ModelSet::subsetOf(const ModelSet& other) const {
  return std::includes(other.models_.begin(), other.models_.end(),
                       models_.begin(), models_.end());
}

ModelSet setUnion(const ModelSet& a, const ModelSet& b) {
  std::vector<Interp> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return ModelSet(std::move(out));
}

ModelSet setIntersection(const ModelSet& a, const ModelSet& b) {
  std::vector<Interp> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return ModelSet(std::move(out));
}

ModelSet universe(const Signature& sig) {
  if (sig.size() > Signature::kMaxEnumAtoms)
    throw LimitError("model enumeration capped at " +
                     std::to_string(Signature::kMaxEnumAtoms) + " atoms");
  std::vector<Interp> out;
  out.reserve(std::size_t{1} << sig.size());
  for (Mask m = 0; m < (Mask{1} << sig.size()); ++m) out.push_back({m});
  return ModelSet(std::move(out));
}

ModelSet flipSet(Interp v, const ModelSet& m) {
  std::vector<Interp> out;
  out.reserve(m.size());
  for (Interp w : m) out.push_back(flipInterp(v, w));
  return ModelSet(std::move(out));
}

ModelSet dualSet(const Signature& sig, const ModelSet& m) {
  std::vector<Interp> out;
  out.reserve(m.size());
  for (Interp w : m) {
    if (!sig.covers(w))
      throw SignatureError("model outside the signature's universe");
    out.push_back({sig.universeBits() ^ w.bits});
  }
  return ModelSet(std::move(out));
}

Renaming Renaming::identity(int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  return Renaming(std::move(perm));
}

Renaming Renaming::ofPermutation(std::vector<int> perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p])
      throw SignatureError("renaming is not a bijection");
    seen[p] = true;
  }
  return Renaming(std::move(perm));
}

Renaming Renaming::ofMap(
    const Signature& sig,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<int> perm(sig.size());
  for (int i = 0; i < sig.size(); ++i) perm[i] = i;
  for (const auto& [from, to] : pairs) {
    auto f = sig.indexOf(from);
    auto t = sig.indexOf(to);
    if (!f || !t)
      throw SignatureError("renaming mentions an atom outside the signature");
    perm[*f] = *t;
  }
  return ofPermutation(std::move(perm));
}

Interp Renaming::apply(Interp v) const {
  Mask out = 0;
  for (int i = 0; i < size(); ++i)
    if (v.bits >> i & 1) out |= Mask{1} << perm_[i];
  return {out};
}

Renaming Renaming::inverse() const {
  std::vector<int> inv(perm_.size());
  for (int i = 0; i < size(); ++i) inv[perm_[i]] = i;
  return Renaming(std::move(inv));
}

ModelSet renameSet(const Renaming& r, const ModelSet& m) {
  std::vector<Interp> out;
  out.reserve(m.size());
  for (Interp w : m) out.push_back(r.apply(w));
  return ModelSet(std::move(out));
}

std::string toWord(const Signature& sig, Interp v, bool ascii) {
  if (!sig.covers(v))
    throw SignatureError("model outside the signature's universe");
  if (v.bits == 0) return ascii ? "{}" : "∅";
  std::string out;
  for (int i = 0; i < sig.size(); ++i)
    if (v.bits >> i & 1) out += sig.atom(i);
  return out;
}

std::string toWords(const Signature& sig, const ModelSet& m, bool ascii) {
  std::string out = "{";
  bool sep = false;
  for (Interp w : m) {
    if (sep) out += ", ";
    out += toWord(sig, w, ascii);
    sep = true;
  }
  return out + "}";
}

}  // namespace rev
