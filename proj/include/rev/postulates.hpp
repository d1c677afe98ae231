#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rev/constructions.hpp"

namespace rev {

enum class PostulateId {
  R1, R2, R3, R4, R5, R6, R5c, R6c, R7, R8,
  RN,    // Neutrality (renaming invariance, complete prior)
  RF,    // Flipping   (flip invariance, complete prior)
  RA,    // Addition   (fresh atoms push a menu entry out)
  RBoB,  // Best-of-Best recovery
  RBoW,  // Best-of-Worst recovery
  RBoWS  // Best-of-Worst-Surprise recovery
};

inline constexpr PostulateId kAllPostulates[] = {
    PostulateId::R1,  PostulateId::R2,  PostulateId::R3,   PostulateId::R4,
    PostulateId::R5,  PostulateId::R6,  PostulateId::R5c,  PostulateId::R6c,
    PostulateId::R7,  PostulateId::R8,  PostulateId::RN,   PostulateId::RF,
    PostulateId::RA,  PostulateId::RBoB, PostulateId::RBoW, PostulateId::RBoWS};

std::string_view postulateName(PostulateId p);
std::optional<PostulateId> postulateFromName(std::string_view name);

// One concrete scenario a postulate is evaluated on. All model sets live over
// a shared signature; RA extends it by `freshAtoms` minted atoms.
struct CheckInstance {
  ModelSet phi;
  ModelSet mu;
  std::optional<ModelSet> mu2;       // R5/R6/R5c/R6c
  std::optional<Renaming> renaming;  // RN
  std::optional<Interp> flip;        // RF
  std::optional<Interp> raFirst;     // RA: the kept menu entry w1
  int freshAtoms = 0;                // RA: |x|
};

struct Counterexample {
  PostulateId postulate = PostulateId::R1;
  OperatorKind op = OperatorKind::DalalMinMin;
  CheckInstance instance;
  ModelSet lhs, rhs;  // the sides of the violated (in)equivalence
};

// Evaluates one postulate on one instance; nullopt means the instance passes
// (vacuously or otherwise). The prior must be consistent and, for RN/RF/RA
// and the restricted R5c/R6c, complete.
std::optional<Counterexample> checkInstance(PostulateId p, OperatorKind op,
                                            const CheckInstance& inst,
                                            const Signature& sig);

struct SweepLimits {
  int maxSingleMuAtoms = 4;  // hard cap for pair-quantified sweeps
  int maxMultiAtoms = 3;     // cap where two mus / flips are quantified
  std::chrono::milliseconds budget{0};  // 0 = unlimited
  bool exhaustive = false;   // count every violation instead of stopping
  bool minimalCex = false;   // report the (|phi|,|mu|)-minimal counterexample
  std::uint64_t rnSamples = 20000;  // sampled RN instances at n = 4
  std::uint64_t seed = 0xC0FFEE;
  int threads = 0;           // 0 = hardware concurrency
};

struct PostulateOutcome {
  bool pass = true;
  std::uint64_t instances = 0;   // evaluated (serial order) instances
  std::uint64_t violations = 0;  // total in exhaustive mode, else 1 on failure
  std::uint64_t excludedDegenerate = 0;  // skipped inconsistent-prior instances
  bool exhaustive = false;
  bool sampled = false;
  std::optional<Counterexample> first;
  double wallSeconds = 0.0;
};

struct CheckReport {
  OperatorKind op = OperatorKind::DalalMinMin;
  int signatureSize = 0;
  std::map<PostulateId, PostulateOutcome> perPostulate;
  double wallSeconds = 0.0;
};

// Exhaustively iterates all semantically distinct instances of postulate `p`
// over model sets of a fresh n-letter signature. Deterministic instance
// order; stops at the first violation unless limits.exhaustive.
CheckReport sweep(OperatorKind op, PostulateId p, int n,
                  const SweepLimits& limits = {});

enum class Expected { Pass, Fail };

// The claimed operator-by-postulate matrix the sweeps are diffed against.
const std::map<std::pair<OperatorKind, PostulateId>, Expected>&
expectedMatrix();

struct MatrixCell {
  OperatorKind op;
  PostulateId postulate;
  int atoms = 0;  // effective signature size (multi-quantified cells clamp)
  PostulateOutcome outcome;
  Expected expected;
  bool matches = false;
};

struct MatrixReport {
  int n = 0;
  std::vector<MatrixCell> cells;
  bool matchesExpected = true;
  double wallSeconds = 0.0;
};

// Runs every (operator, postulate) cell at signature size n (multi-quantified
// postulates are capped by limits.maxMultiAtoms).
MatrixReport runMatrix(int n, const SweepLimits& limits = {});

}  // namespace rev
