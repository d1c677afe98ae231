#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rev/formula.hpp"

using namespace rev;

namespace {

const Signature kAbc({"a", "b", "c"});

// Random formula over the signature, for round-trip and semantics properties.
Formula randomFormula(std::mt19937_64& rng, const Signature& sig, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 7);
  switch (pick(rng)) {
    case 0:
      return Formula::constant(rng() & 1);
    case 1:
    case 2: {
      std::uniform_int_distribution<int> at(0, sig.size() - 1);
      return Formula::atom(sig.atom(at(rng)));
    }
    case 3:
      return Formula::negation(randomFormula(rng, sig, depth - 1));
    case 4:
      return Formula::conjunction(randomFormula(rng, sig, depth - 1),
                                  randomFormula(rng, sig, depth - 1));
    case 5:
      return Formula::disjunction(randomFormula(rng, sig, depth - 1),
                                  randomFormula(rng, sig, depth - 1));
    case 6:
      return Formula::implication(randomFormula(rng, sig, depth - 1),
                                  randomFormula(rng, sig, depth - 1));
    default:
      return Formula::equivalence(randomFormula(rng, sig, depth - 1),
                                  randomFormula(rng, sig, depth - 1));
  }
}

}  // namespace

TEST_CASE("parsing the running example") {
  Formula f = parse("a & !c", kAbc);
  CHECK(f.kind() == Conn::And);
  CHECK(models(f, kAbc) == ModelSet::ofMasks({0b001, 0b011}));  // {a, ab}
}

TEST_CASE("constants and tilde negation") {
  CHECK(parse("true", kAbc).kind() == Conn::True);
  CHECK(models(parse("false", kAbc), kAbc).empty());
  CHECK(models(parse("~a & ~b & ~c", kAbc), kAbc) == ModelSet::ofMasks({0}));
}

TEST_CASE("precedence and associativity") {
  // ! > & > | > -> > <->, with -> right-associative
  Formula f = parse("!a & b | c -> a <-> b", kAbc);
  CHECK(f.kind() == Conn::Iff);
  CHECK(f.left().kind() == Conn::Implies);
  Formula g = parse("a -> b -> c", kAbc);
  CHECK(g.right().kind() == Conn::Implies);
  CHECK(equivalent(g, parse("a -> (b -> c)", kAbc), kAbc));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_WITH_AS(parse("a &", kAbc), "expected a formula", ParseError);
  try {
    parse("a & d", kAbc);
    FAIL("should have thrown");
  } catch (const UnknownAtomError& e) {
    CHECK(e.atom == "d");
    CHECK(e.position == 4);
  }
  try {
    parse("(a | b", kAbc);
    FAIL("should have thrown");
  } catch (const ParseError& e) {
    CHECK(e.position == 6);
  }
  CHECK_THROWS_AS(parse("a < b", kAbc), ParseError);
  CHECK_THROWS_AS(parse("a - b", kAbc), ParseError);
  Signature ext = kAbc.extended(1);
  CHECK_THROWS_AS(parse("_x0", ext), ReservedAtomError);
  // letter-led reserved prefixes are caught after lexing
  Signature custom({"a", "b"}, "res");
  CHECK_THROWS_AS(parse("res0 & a", custom.extended(1)), ReservedAtomError);
}

TEST_CASE("printer round-trips") {
  Formula f = parse("a -> (b <-> !a)", kAbc);
  CHECK(parse(printFormula(f), kAbc).sameAst(f));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    Formula g = randomFormula(rng, kAbc, 4);
    CHECK(parse(printFormula(g), kAbc).sameAst(g));
  }
}

TEST_CASE("models of the five-atom showcase formulas") {
  Signature sig({"a", "b", "c", "d", "e"});
  Formula phi = parse("(!a&!b&!c&!d&!e)|(a&b&c&d&!e)", sig);
  CHECK(models(phi, sig) == ModelSet::ofMasks({0, 0b01111}));  // {∅, abcd}
}

TEST_CASE("formulaFromModels is the canonical DNF") {
  ModelSet m = ModelSet::ofMasks({0b001, 0b011});
  Formula f = formulaFromModels(m, kAbc);
  CHECK(printFormula(f) == "a & !b & !c | a & b & !c");
  CHECK(models(f, kAbc) == m);
  CHECK(formulaFromModels(ModelSet{}, kAbc).kind() == Conn::False);
  // epsilon pattern over {a,b}
  Signature ab({"a", "b"});
  CHECK(printFormula(formulaFromModels(ModelSet::ofMasks({0}), ab)) ==
        "!a & !b");
  CHECK_THROWS_AS(formulaFromModels(ModelSet::ofMasks({0b1000}), kAbc),
                  SignatureError);
}

TEST_CASE("semantic predicates") {
  CHECK(entails(parse("a & b", kAbc), parse("a", kAbc), kAbc));
  CHECK(!entails(parse("a", kAbc), parse("a & b", kAbc), kAbc));
  CHECK(equivalent(parse("a & !c", kAbc), parse("!c & a", kAbc), kAbc));
  CHECK(isComplete(epsilon(kAbc), kAbc));
  CHECK(isConsistent(parse("a | !a", kAbc), kAbc));
  CHECK(!isConsistent(parse("a & !a", kAbc), kAbc));
}

TEST_CASE("epsilon and alpha") {
  CHECK(models(epsilon(kAbc), kAbc) == ModelSet::ofMasks({0}));
  CHECK(models(alpha(kAbc), kAbc) == ModelSet::ofMasks({0b111}));
}

TEST_CASE("dual replaces atoms by their negations") {
  Formula f = parse("a & !c", kAbc);
  CHECK(models(dual(f), kAbc) == dualSet(kAbc, models(f, kAbc)));
  CHECK(equivalent(dual(epsilon(kAbc)), alpha(kAbc), kAbc));
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    Formula g = randomFormula(rng, kAbc, 4);
    CHECK(equivalent(dual(dual(g)), g, kAbc));
    CHECK(models(dual(g), kAbc) == dualSet(kAbc, models(g, kAbc)));
  }
}

TEST_CASE("renaming a three-atom conjunction") {
  Renaming r = Renaming::ofMap(kAbc, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  Formula f = parse("a & !c", kAbc);
  Formula rf = renameFormula(r, kAbc, f);
  CHECK(models(rf, kAbc) == ModelSet::ofMasks({0b010, 0b110}));  // {b, bc}
  Renaming id = Renaming::identity(3);
  CHECK(renameFormula(id, kAbc, f).sameAst(f));
}

TEST_CASE("flipping two atoms of a conjunction") {
  Formula f = parse("a & !c", kAbc);
  // f_bc(phi) has models {abc, ac}
  CHECK(models(flipFormula(kAbc, {0b110}, f), kAbc) ==
        ModelSet::ofMasks({0b111, 0b101}));
  CHECK(flipFormula(kAbc, {0}, f).sameAst(f));
}

TEST_CASE("rename and flip commute with models") {
  std::mt19937_64 rng(17);
  std::vector<int> perm{2, 0, 1};
  Renaming r = Renaming::ofPermutation(perm);
  for (int i = 0; i < 300; ++i) {
    Formula g = randomFormula(rng, kAbc, 4);
    CHECK(models(renameFormula(r, kAbc, g), kAbc) ==
          renameSet(r, models(g, kAbc)));
    Interp v{rng() & 0b111};
    CHECK(models(flipFormula(kAbc, v, g), kAbc) ==
          flipSet(v, models(g, kAbc)));
  }
}

TEST_CASE("formulaFromModels round-trips semantically") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 300; ++i) {
    Formula g = randomFormula(rng, kAbc, 4);
    CHECK(equivalent(formulaFromModels(models(g, kAbc), kAbc), g, kAbc));
  }
}

TEST_CASE("evaluation rejects atoms outside the signature") {
  Signature ab({"a", "b"});
  CHECK_THROWS_AS(models(Formula::atom("z"), ab), UnknownAtomError);
}

TEST_CASE("model enumeration honors the hard cap") {
  std::vector<std::string> names;
  for (int i = 0; i < 25; ++i) names.push_back("p" + std::to_string(i));
  Signature big(names);
  CHECK_THROWS_AS(models(Formula::constant(true), big), LimitError);
}

TEST_CASE("dual complements every model set (exhaustive n <= 4)") {
  for (int n = 1; n <= 4; ++n) {
    Signature sig = Signature::letters(n);
    const std::uint64_t M = std::uint64_t{1} << (1 << n);
    for (std::uint64_t word = 0; word < M; ++word) {
      std::vector<Interp> ms;
      for (int i = 0; i < (1 << n); ++i)
        if (word >> i & 1) ms.push_back({static_cast<Mask>(i)});
      ModelSet m(std::move(ms));
      Formula f = formulaFromModels(m, sig);
      REQUIRE(models(dual(f), sig) == dualSet(sig, m));
    }
  }
}

TEST_CASE("exclusive disjunction by truth table") {
  Signature ab({"a", "b"});
  CHECK(models(parse("(a|b) & !(a&b)", ab), ab) == ModelSet::ofMasks({1, 2}));
}

TEST_CASE("atomsInText collects atoms in order of first occurrence") {
  auto atoms = atomsInText("b & (a | b) -> c");
  CHECK(atoms == std::vector<std::string>{"b", "a", "c"});
}
