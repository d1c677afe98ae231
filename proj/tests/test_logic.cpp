#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rev/logic.hpp"

using namespace rev;

TEST_CASE("signature validates its atoms") {
  Signature sig({"a", "b", "c"});
  CHECK(sig.size() == 3);
  CHECK(sig.indexOf("b") == 1);
  CHECK(!sig.indexOf("d").has_value());
  CHECK_THROWS_AS(Signature({"a", "a"}), SignatureError);
  CHECK_THROWS_AS(Signature({""}), SignatureError);
  CHECK_THROWS_AS(Signature({"1bad"}), SignatureError);
  CHECK_THROWS_AS(Signature({"_x0"}), SignatureError);
}

TEST_CASE("signature extension mints reserved atoms in order") {
  Signature sig({"a", "b"});
  Signature ext = sig.extended(3);
  CHECK(ext.size() == 5);
  CHECK(ext.atom(2) == "_x0");
  CHECK(ext.atom(4) == "_x2");
  Signature more = ext.extended(1);
  CHECK(more.atom(5) == "_x3");
  CHECK(sig.size() == 2);  // original untouched
}

TEST_CASE("word display follows signature order") {
  Signature sig({"a", "b", "c", "d"});
  CHECK(toWord(sig, {0}) == "∅");
  CHECK(toWord(sig, {0}, true) == "{}");
  CHECK(toWord(sig, {0b1011}) == "abd");
  CHECK(toWords(sig, ModelSet::ofMasks({0, 0b1111})) == "{∅, abcd}");
}

TEST_CASE("symDiff and flip basics") {
  // symDiff(a, ac) = c over {a,b,c}
  CHECK(symDiff({0b001}, {0b101}) == Interp{0b100});
  CHECK(symDiff({0b011}, {0b011}) == Interp{0});
  CHECK(flipInterp({0}, {0b101}) == Interp{0b101});
}

TEST_CASE("flip is an involution") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    Interp v{rng() & 0xFFFF}, w{rng() & 0xFFFF};
    CHECK(flipInterp(v, flipInterp(v, w)) == w);
  }
}

TEST_CASE("model sets are canonically ordered and deduplicated") {
  ModelSet m = ModelSet::ofMasks({5, 1, 5, 3});
  CHECK(m.size() == 3);
  CHECK(m[0] == Interp{1});
  CHECK(m[2] == Interp{5});
  CHECK(m.contains({3}));
  CHECK(!m.contains({4}));
  m.insert({4});
  CHECK(m.size() == 4);
  CHECK(m[2] == Interp{4});
}

TEST_CASE("set algebra") {
  ModelSet a = ModelSet::ofMasks({1, 2, 3});
  ModelSet b = ModelSet::ofMasks({2, 3, 4});
  CHECK(setUnion(a, b) == ModelSet::ofMasks({1, 2, 3, 4}));
  CHECK(setIntersection(a, b) == ModelSet::ofMasks({2, 3}));
  CHECK(ModelSet::ofMasks({2, 3}).subsetOf(a));
  CHECK(!a.subsetOf(b));
}

TEST_CASE("universe enumerates every interpretation and honors the cap") {
  Signature sig({"a", "b", "c"});
  CHECK(universe(sig).size() == 8);
  std::vector<std::string> big;
  for (int i = 0; i < 25; ++i) big.push_back("p" + std::to_string(i));
  CHECK_THROWS_AS(universe(Signature(big)), LimitError);
}

TEST_CASE("dualSet complements against the signature") {
  Signature sig({"a", "b", "c"});
  ModelSet m = ModelSet::ofMasks({0b001, 0b011});  // {a, ab}
  CHECK(dualSet(sig, m) == ModelSet::ofMasks({0b110, 0b100}));  // {bc, c}
  CHECK_THROWS_AS(dualSet(sig, ModelSet::ofMasks({0b1000})), SignatureError);
}

TEST_CASE("renamings are validated bijections") {
  Signature sig({"a", "b", "c"});
  CHECK_THROWS_AS(Renaming::ofPermutation({0, 0, 1}), SignatureError);
  CHECK_THROWS_AS(Renaming::ofMap(sig, {{"a", "b"}}), SignatureError);
  Renaming r = Renaming::ofMap(sig, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  CHECK(r.apply({0b001}) == Interp{0b010});  // a -> b
  CHECK(r.apply({0b011}) == Interp{0b110});  // ab -> bc
  Renaming inv = r.inverse();
  CHECK(inv.apply(r.apply({0b101})) == Interp{0b101});
}

TEST_CASE("renameSet and flipSet act pointwise") {
  Signature sig({"a", "b", "c"});
  Renaming r = Renaming::ofMap(sig, {{"a", "b"}, {"b", "a"}});
  ModelSet sym = ModelSet::ofMasks({0b011});
  CHECK(renameSet(r, sym) == sym);  // ab is a fixed point of the swap
  // f_a over {ac, abc} -> {c, bc}
  CHECK(flipSet({0b001}, ModelSet::ofMasks({0b101, 0b111})) ==
        ModelSet::ofMasks({0b100, 0b110}));
  // f_empty is the identity
  ModelSet m = ModelSet::ofMasks({1, 4, 6});
  CHECK(flipSet({0}, m) == m);
}
