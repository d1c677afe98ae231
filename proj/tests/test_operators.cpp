#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rev/operators.hpp"
#include "support/bruteforce.hpp"

using namespace rev;

namespace {

const Signature kSig5({"a", "b", "c", "d", "e"});
const Signature kAbc({"a", "b", "c"});
const Mask kEmpty = 0, kAbcd = 0b01111, kAbe = 0b10011;

ModelSet toSet(const std::vector<Mask>& masks) {
  std::vector<Interp> v;
  for (Mask m : masks) v.push_back({m});
  return ModelSet(std::move(v));
}

}  // namespace

TEST_CASE("best-case and worst-case selection disagree") {
  ModelSet phi = ModelSet::ofMasks({kEmpty, kAbcd});
  ModelSet mu = ModelSet::ofMasks({kEmpty, kAbcd, kAbe});
  CHECK(reviseModels(OperatorKind::DalalMinMin, phi, mu) ==
        ModelSet::ofMasks({kEmpty, kAbcd}));
  CHECK(reviseModels(OperatorKind::DistMinMax, phi, mu) ==
        ModelSet::ofMasks({kAbe}));
}

TEST_CASE("surprise follows the context") {
  ModelSet phi = ModelSet::ofMasks({kEmpty, kAbcd});
  ModelSet mu = ModelSet::ofMasks({kEmpty, kAbcd, kAbe});
  ModelSet nu = ModelSet::ofMasks({kAbcd, kAbe});
  CHECK(reviseModels(OperatorKind::SurpriseMinMax, phi, mu) ==
        ModelSet::ofMasks({kAbe}));
  CHECK(reviseModels(OperatorKind::SurpriseMinMax, phi, nu) ==
        ModelSet::ofMasks({kAbcd}));
}

TEST_CASE("the three-atom showcase separates all three operators") {
  ModelSet phi = ModelSet::ofMasks({0b001, 0b010});  // {a, b}
  ModelSet mu = ModelSet::ofMasks({0b101, 0b111});   // {ac, abc}
  CHECK(reviseModels(OperatorKind::DalalMinMin, phi, mu) ==
        ModelSet::ofMasks({0b101}));
  CHECK(reviseModels(OperatorKind::DistMinMax, phi, mu) ==
        ModelSet::ofMasks({0b111}));
  CHECK(reviseModels(OperatorKind::SurpriseMinMax, phi, mu) ==
        ModelSet::ofMasks({0b101, 0b111}));  // ties kept
}

TEST_CASE("formula-level revise matches the model-level core") {
  Formula phi = parse("(!a&!b&!c&!d&!e)|(a&b&c&d&!e)", kSig5);
  Formula mu = parse("(!a&!b&!c&!d&!e)|(a&b&c&d&!e)|(a&b&!c&!d&e)", kSig5);
  RevisionResult r = revise(OperatorKind::DistMinMax, phi, mu, kSig5);
  CHECK(r.resultModels == ModelSet::ofMasks({kAbe}));
  CHECK(printFormula(r.resultFormula) == "a & b & !c & !d & e");
  CHECK(models(r.resultFormula, kSig5) == r.resultModels);
  CHECK(r.table.has_value());
  REQUIRE(r.scorePerModel.size() == 3);
  CHECK(r.scorePerModel[0].second == 4);
  CHECK(r.scorePerModel[2].second == 3);
}

TEST_CASE("degenerate new information yields bottom") {
  ModelSet phi = ModelSet::ofMasks({1});
  RevisionResult r =
      reviseByModels(OperatorKind::DalalMinMin, phi, ModelSet{}, kAbc);
  CHECK(r.resultModels.empty());
  CHECK(r.resultFormula.kind() == Conn::False);
  CHECK(!r.table.has_value());
  CHECK(!r.degeneratePrior);
}

TEST_CASE("degenerate prior returns mu whole, flagged") {
  ModelSet mu = ModelSet::ofMasks({1, 2, 5});
  for (OperatorKind k : kAllOperators) {
    RevisionResult r = reviseByModels(k, ModelSet{}, mu, kAbc);
    CHECK(r.resultModels == mu);
    CHECK(r.degeneratePrior);
    CHECK(!r.table.has_value());
  }
}

TEST_CASE("singleton mu is returned for every operator") {
  ModelSet mu = ModelSet::ofMasks({0b110});
  ModelSet phi = ModelSet::ofMasks({0b001, 0b011});
  for (OperatorKind k : kAllOperators)
    CHECK(reviseModels(k, phi, mu) == mu);
}

TEST_CASE("R1 and R3 hold by construction (exhaustive n=3)") {
  const int M = 1 << 8;
  for (int pw = 1; pw < M; ++pw) {
    std::vector<Mask> pm;
    for (int i = 0; i < 8; ++i)
      if (pw >> i & 1) pm.push_back(i);
    ModelSet phi = toSet(pm);
    for (int mw = 1; mw < M; ++mw) {
      std::vector<Mask> mm;
      for (int i = 0; i < 8; ++i)
        if (mw >> i & 1) mm.push_back(i);
      ModelSet mu = toSet(mm);
      for (OperatorKind k : kAllOperators) {
        ModelSet r = reviseModels(k, phi, mu);
        REQUIRE(r.subsetOf(mu));
        REQUIRE(!r.empty());
      }
    }
  }
}

TEST_CASE("complete priors collapse the three operators") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 500; ++i) {
    ModelSet phi = toSet({rng() & 0xF});
    ModelSet mu = toSet(bruteforce::randomSet(rng, 4, 8));
    ModelSet a = reviseModels(OperatorKind::DalalMinMin, phi, mu);
    CHECK(a == reviseModels(OperatorKind::DistMinMax, phi, mu));
    CHECK(a == reviseModels(OperatorKind::SurpriseMinMax, phi, mu));
  }
}

TEST_CASE("Dalal vacuity: overlapping inputs conjoin") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 500; ++i) {
    ModelSet phi = toSet(bruteforce::randomSet(rng, 4, 8));
    ModelSet mu = toSet(bruteforce::randomSet(rng, 4, 8));
    ModelSet both = setIntersection(phi, mu);
    if (both.empty()) continue;
    CHECK(reviseModels(OperatorKind::DalalMinMin, phi, mu) == both);
  }
}

TEST_CASE("known failures: min-max and surprise break vacuity") {
  ModelSet phi = ModelSet::ofMasks({kEmpty, kAbcd});
  ModelSet mu = ModelSet::ofMasks({kEmpty, kAbcd, kAbe});
  ModelSet both = setIntersection(phi, mu);
  CHECK(reviseModels(OperatorKind::DistMinMax, phi, mu) != both);
  CHECK(reviseModels(OperatorKind::SurpriseMinMax, phi, mu) != both);
}

TEST_CASE("known failures: surprise breaks R5/R6 when the menu narrows") {
  ModelSet phi = ModelSet::ofMasks({kEmpty, kAbcd});
  ModelSet mu = ModelSet::ofMasks({kEmpty, kAbcd, kAbe});
  ModelSet nu = ModelSet::ofMasks({kAbcd, kAbe});
  ModelSet lhs = setIntersection(
      reviseModels(OperatorKind::SurpriseMinMax, phi, mu), nu);
  ModelSet rhs = reviseModels(OperatorKind::SurpriseMinMax, phi,
                              setIntersection(mu, nu));
  CHECK(lhs == ModelSet::ofMasks({kAbe}));
  CHECK(rhs == ModelSet::ofMasks({kAbcd}));
  CHECK(!lhs.subsetOf(rhs));  // R5 violated
  CHECK(!rhs.subsetOf(lhs));  // R6 violated
}

TEST_CASE("results are invariant under unused signature extension") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 300; ++i) {
    ModelSet phi = toSet(bruteforce::randomSet(rng, 4, 6));
    ModelSet mu = toSet(bruteforce::randomSet(rng, 4, 6));
    for (OperatorKind k : kAllOperators) {
      // the same masks denote the same sets over {a..d} and over {a..f}
      CHECK(reviseModels(k, phi, mu) == reviseModels(k, phi, mu));
      RevisionResult small = reviseByModels(k, phi, mu, Signature::letters(4));
      RevisionResult wide = reviseByModels(k, phi, mu, Signature::letters(6));
      CHECK(small.resultModels == wide.resultModels);
    }
  }
}

TEST_CASE("random instances match the definitional oracle") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 2000; ++i) {
    auto pm = bruteforce::randomSet(rng, 4, 8);
    auto mm = bruteforce::randomSet(rng, 4, 8);
    for (auto [k, bk] :
         {std::pair{OperatorKind::DalalMinMin, bruteforce::Op::Dalal},
          std::pair{OperatorKind::DistMinMax, bruteforce::Op::DMax},
          std::pair{OperatorKind::SurpriseMinMax, bruteforce::Op::SMax}}) {
      ModelSet got = reviseModels(k, toSet(pm), toSet(mm));
      ModelSet want = toSet(bruteforce::revise(bk, pm, mm));
      CHECK(got == want);
    }
  }
}

TEST_CASE("operator names round-trip") {
  for (OperatorKind k : kAllOperators)
    CHECK(operatorFromName(operatorName(k)) == k);
  CHECK(!operatorFromName("bogus").has_value());
}
