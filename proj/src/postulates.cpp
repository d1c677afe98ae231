/* Executable postulates and the exhaustive sweep harness.
 *
 * Sweeps quantify over model sets directly (R4 collapses syntax), so an
 * instance space is indexed by words with one bit per interpretation of the
 * n-letter signature. Inconsistent priors are excluded by construction and
 * their count is reported. The instance space is split into contiguous
 * chunks processed by worker threads; merging is deterministic (first
 * counterexample = smallest instance index, counts summed).
 */
#include "rev/postulates.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

namespace rev {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

std::string_view postulateName(PostulateId p) {
  switch (p) {
    case PostulateId::R1: return "R1";
    case PostulateId::R2: return "R2";
    case PostulateId::R3: return "R3";
    case PostulateId::R4: return "R4";
    case PostulateId::R5: return "R5";
    case PostulateId::R6: return "R6";
    case PostulateId::R5c: return "R5c";
    case PostulateId::R6c: return "R6c";
    case PostulateId::R7: return "R7";
    case PostulateId::R8: return "R8";
    case PostulateId::RN: return "RN";
    case PostulateId::RF: return "RF";
    case PostulateId::RA: return "RA";
    case PostulateId::RBoB: return "RBoB";
    case PostulateId::RBoW: return "RBoW";
    case PostulateId::RBoWS: return "RBoWS";
  }
  return "?";
}

std::optional<PostulateId> postulateFromName(std::string_view name) {
  for (PostulateId p : kAllPostulates)
    if (postulateName(p) == name) return p;
  return std::nullopt;
}

namespace {

bool isComplete(const ModelSet& m) { return m.size() == 1; }

Counterexample makeCex(PostulateId p, OperatorKind op, CheckInstance inst,
                       ModelSet lhs, ModelSet rhs) {
  Counterexample c;
  c.postulate = p;
  c.op = op;
  c.instance = std::move(inst);
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  return c;
}

// Two structurally different formulas denoting the same models: the canonical
// DNF, and a doubly negated DNF assembled in reverse model order.
Formula dnfVariant(const ModelSet& m, const Signature& sig) {
  if (m.empty()) return Formula::negation(Formula::constant(true));
  std::vector<Interp> order(m.begin(), m.end());
  std::reverse(order.begin(), order.end());
  Formula acc;
  bool first = true;
  for (Interp w : order) {
    Formula term;
    bool fl = true;
    for (int i = 0; i < sig.size(); ++i) {
      Formula lit = (w.bits >> i & 1)
                        ? Formula::atom(sig.atom(i))
                        : Formula::negation(Formula::atom(sig.atom(i)));
      term = fl ? lit : Formula::conjunction(term, lit);
      fl = false;
    }
    acc = first ? term : Formula::disjunction(acc, term);
    first = false;
  }
  return Formula::negation(Formula::negation(acc));
}

}  // namespace

std::optional<Counterexample> checkInstance(PostulateId p, OperatorKind op,
                                            const CheckInstance& inst,
                                            const Signature& sig) {
  if (inst.phi.empty())
    throw DomainError("postulate instances require a consistent prior");
  const ModelSet& phi = inst.phi;
  const ModelSet& mu = inst.mu;
  auto O = [&](const ModelSet& a, const ModelSet& b) {
    return reviseModels(op, a, b);
  };

  switch (p) {
    case PostulateId::R1: {
      ModelSet r = O(phi, mu);
      if (r.subsetOf(mu)) return std::nullopt;
      return makeCex(p, op, inst, r, mu);
    }
    case PostulateId::R2: {
      ModelSet both = setIntersection(phi, mu);
      if (both.empty()) return std::nullopt;
      ModelSet r = O(phi, mu);
      if (r == both) return std::nullopt;
      return makeCex(p, op, inst, r, both);
    }
    case PostulateId::R3: {
      if (mu.empty()) return std::nullopt;
      ModelSet r = O(phi, mu);
      if (!r.empty()) return std::nullopt;
      return makeCex(p, op, inst, r, mu);
    }
    case PostulateId::R4: {
      Formula phi1 = formulaFromModels(phi, sig);
      Formula mu1 = formulaFromModels(mu, sig);
      Formula phi2 = dnfVariant(phi, sig);
      Formula mu2 = dnfVariant(mu, sig);
      ModelSet lhs = revise(op, phi1, mu1, sig).resultModels;
      ModelSet rhs = revise(op, phi2, mu2, sig).resultModels;
      if (lhs == rhs) return std::nullopt;
      return makeCex(p, op, inst, lhs, rhs);
    }
    case PostulateId::R5:
    case PostulateId::R5c: {
      if (!inst.mu2) throw DomainError("R5 needs a second revision input");
      if (p == PostulateId::R5c && !isComplete(phi))
        throw DomainError("R5c requires a complete prior");
      ModelSet lhs = setIntersection(O(phi, mu), *inst.mu2);
      if (lhs.empty()) return std::nullopt;
      ModelSet rhs = O(phi, setIntersection(mu, *inst.mu2));
      if (lhs.subsetOf(rhs)) return std::nullopt;
      return makeCex(p, op, inst, lhs, rhs);
    }
    case PostulateId::R6:
    case PostulateId::R6c: {
      if (!inst.mu2) throw DomainError("R6 needs a second revision input");
      if (p == PostulateId::R6c && !isComplete(phi))
        throw DomainError("R6c requires a complete prior");
      ModelSet lhs = setIntersection(O(phi, mu), *inst.mu2);
      if (lhs.empty()) return std::nullopt;
      ModelSet rhs = O(phi, setIntersection(mu, *inst.mu2));
      if (rhs.subsetOf(lhs)) return std::nullopt;
      return makeCex(p, op, inst, lhs, rhs);
    }
    case PostulateId::R7: {
      ModelSet r = O(phi, mu);
      ModelSet d = dualSet(sig, phi);
      if (!r.subsetOf(d)) return std::nullopt;
      if (r == mu) return std::nullopt;
      return makeCex(p, op, inst, r, mu);
    }
    case PostulateId::R8: {
      ModelSet d = dualSet(sig, phi);
      if (mu.subsetOf(d)) return std::nullopt;
      ModelSet overlap = setIntersection(O(phi, mu), d);
      if (overlap.empty()) return std::nullopt;
      return makeCex(p, op, inst, overlap, ModelSet{});
    }
    case PostulateId::RN: {
      if (!inst.renaming) throw DomainError("RN needs a renaming");
      if (!isComplete(phi)) throw DomainError("RN requires a complete prior");
      const Renaming& r = *inst.renaming;
      ModelSet lhs = renameSet(r, O(phi, mu));
      ModelSet rhs = O(renameSet(r, phi), renameSet(r, mu));
      if (lhs == rhs) return std::nullopt;
      return makeCex(p, op, inst, lhs, rhs);
    }
    case PostulateId::RF: {
      if (!inst.flip) throw DomainError("RF needs a flip set");
      if (!isComplete(phi)) throw DomainError("RF requires a complete prior");
      Interp v = *inst.flip;
      ModelSet lhs = flipSet(v, O(phi, mu));
      ModelSet rhs = O(flipSet(v, phi), flipSet(v, mu));
      if (lhs == rhs) return std::nullopt;
      return makeCex(p, op, inst, lhs, rhs);
    }
    case PostulateId::RA: {
      if (!inst.raFirst || inst.freshAtoms < 1 || mu.size() != 2 ||
          !mu.contains(*inst.raFirst))
        throw DomainError("RA needs a two-model menu, a kept entry and fresh atoms");
      if (!isComplete(phi)) throw DomainError("RA requires a complete prior");
      Interp w1 = *inst.raFirst;
      Interp w2 = mu[0] == w1 ? mu[1] : mu[0];
      if (!O(phi, mu).contains(w1)) return std::nullopt;
      Signature ext = sig.extended(inst.freshAtoms);
      Mask fresh = (ext.universeBits() ^ sig.universeBits());
      ModelSet menu(std::vector<Interp>{w1, {w2.bits | fresh}});
      ModelSet lhs = O(phi, menu);
      ModelSet rhs(std::vector<Interp>{w1});
      if (lhs == rhs) return std::nullopt;
      return makeCex(p, op, inst, lhs, rhs);
    }
    case PostulateId::RBoB: {
      if (mu.empty()) return std::nullopt;
      ModelSet lhs = O(phi, mu);
      ModelSet rhs = recoverBoB(phi, beta(phi, mu), mu);
      if (lhs == rhs) return std::nullopt;
      return makeCex(p, op, inst, lhs, rhs);
    }
    case PostulateId::RBoW: {
      if (mu.empty()) return std::nullopt;
      ModelSet lhs = O(phi, mu);
      ModelSet rhs = recoverBoW(phi, gamma(phi, mu), mu);
      if (lhs == rhs) return std::nullopt;
      return makeCex(p, op, inst, lhs, rhs);
    }
    case PostulateId::RBoWS: {
      if (mu.empty()) return std::nullopt;
      ModelSet lhs = O(phi, mu);
      AdjunctionSet adj = adjunction(phi, mu, sig);
      ModelSet rhs = recoverBoWS(phi, sigmaConstruct(phi, mu, sig), mu, adj);
      if (lhs == rhs) return std::nullopt;
      return makeCex(p, op, inst, lhs, rhs);
    }
  }
  throw DomainError("unknown postulate");
}

namespace {

// word with one bit per interpretation (mask < 2^n), describing a model set
using SetWord = std::uint64_t;

std::vector<ModelSet> buildSetTable(int n) {
  const std::uint64_t M = std::uint64_t{1} << (std::uint64_t{1} << n);
  std::vector<ModelSet> table;
  table.reserve(M);
  const int interps = 1 << n;
  for (std::uint64_t w = 0; w < M; ++w) {
    std::vector<Interp> models;
    for (int i = 0; i < interps; ++i)
      if (w >> i & 1) models.push_back({static_cast<Mask>(i)});
    table.push_back(ModelSet(std::move(models)));
  }
  return table;
}

SetWord toWordSet(const ModelSet& m) {
  SetWord w = 0;
  for (Interp v : m) w |= SetWord{1} << v.bits;
  return w;
}

std::vector<std::vector<int>> allPermutations(int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

struct WorkerResult {
  std::uint64_t violations = 0;
  std::uint64_t firstIdx = UINT64_MAX;
  std::optional<Counterexample> firstCex;
  std::uint64_t bestPhi = UINT64_MAX, bestMu = UINT64_MAX,
                bestIdx = UINT64_MAX;
  std::optional<Counterexample> bestCex;
};

bool isMultiQuantified(PostulateId p) {
  switch (p) {
    case PostulateId::R5:
    case PostulateId::R6:
    case PostulateId::R5c:
    case PostulateId::R6c:
    case PostulateId::RF:
      return true;
    default:
      return false;
  }
}

struct SweepPlan {
  std::uint64_t count = 0;
  std::uint64_t excluded = 0;
  bool sampled = false;
  // returns a per-worker evaluator: idx -> counterexample or pass
  std::function<std::function<std::optional<Counterexample>(std::uint64_t)>()>
      makeWorker;
};

struct SweepSetup {
  OperatorKind op;
  PostulateId p;
  int n;
  Signature sig;
  std::vector<ModelSet> sets;
  std::vector<std::vector<int>> perms;
  SweepLimits limits;
};

SweepPlan planPairSweep(const SweepSetup& s) {
  const std::uint64_t M = s.sets.size();
  SweepPlan plan;
  plan.count = (M - 1) * M;
  plan.excluded = M;  // pairs with an inconsistent prior
  plan.makeWorker = [&s, M]() {
    return [&s, M](std::uint64_t idx) {
      CheckInstance inst;
      inst.phi = s.sets[1 + idx / M];
      inst.mu = s.sets[idx % M];
      return checkInstance(s.p, s.op, inst, s.sig);
    };
  };
  return plan;
}

// R5/R6 and their complete-prior restrictions, with a per-prior cache of
// operator results keyed by the mu word (mu1 and mu1&mu2 hit the same cache).
SweepPlan planTripleSweep(const SweepSetup& s) {
  const std::uint64_t M = s.sets.size();
  const bool complete = s.p == PostulateId::R5c || s.p == PostulateId::R6c;
  const bool five = s.p == PostulateId::R5 || s.p == PostulateId::R5c;
  const std::uint64_t priors = complete ? (std::uint64_t{1} << s.n) : M - 1;
  SweepPlan plan;
  plan.count = priors * M * M;
  plan.excluded = complete ? 0 : M * M;
  plan.makeWorker = [&s, M, complete, five]() {
    struct State {
      std::uint64_t phiKey = UINT64_MAX;
      ModelSet phi;
      std::vector<SetWord> cache;  // result word per mu word; UINT64_MAX = unset
    };
    auto st = std::make_shared<State>();
    st->cache.assign(M, UINT64_MAX);
    return [&s, M, complete, five, st](std::uint64_t idx)
               -> std::optional<Counterexample> {
      std::uint64_t r = idx;
      const std::uint64_t mu2W = r % M;
      r /= M;
      const std::uint64_t mu1W = r % M;
      r /= M;
      const std::uint64_t phiKey = r;
      if (st->phiKey != phiKey) {
        st->phiKey = phiKey;
        st->phi = complete
                      ? ModelSet(std::vector<Interp>{{static_cast<Mask>(phiKey)}})
                      : s.sets[1 + phiKey];
        std::fill(st->cache.begin(), st->cache.end(), UINT64_MAX);
      }
      const ModelSet& phi = st->phi;
      auto resultWord = [&](std::uint64_t muW) {
        SetWord& slot = st->cache[muW];
        if (slot == UINT64_MAX)
          slot = toWordSet(reviseModels(s.op, phi, s.sets[muW]));
        return slot;
      };
      const SetWord lhs = resultWord(mu1W) & mu2W;
      if (lhs == 0) return std::nullopt;
      const SetWord rhs = resultWord(mu1W & mu2W);
      const bool ok = five ? (lhs & ~rhs) == 0 : (rhs & ~lhs) == 0;
      if (ok) return std::nullopt;
      CheckInstance inst;
      inst.phi = phi;
      inst.mu = s.sets[mu1W];
      inst.mu2 = s.sets[mu2W];
      auto cex = checkInstance(s.p, s.op, inst, s.sig);
      if (!cex) throw Error("internal: cached sweep disagrees with checkInstance");
      return cex;
    };
  };
  return plan;
}

SweepPlan planNeutralitySweep(const SweepSetup& s) {
  const std::uint64_t M = s.sets.size();
  const std::uint64_t V = std::uint64_t{1} << s.n;
  const std::uint64_t P = s.perms.size();
  SweepPlan plan;
  const bool sampled = s.n >= 4;
  plan.sampled = sampled;
  plan.count = sampled ? s.limits.rnSamples : V * M * P;
  plan.makeWorker = [&s, M, V, P, sampled]() {
    return [&s, M, V, P, sampled](std::uint64_t idx)
               -> std::optional<Counterexample> {
      std::uint64_t v, muW, permIdx;
      if (sampled) {
        std::uint64_t h = splitmix64(s.limits.seed ^ (idx * 0x9E3779B97F4A7C15ull));
        v = h % V;
        h = splitmix64(h);
        muW = h % M;
        h = splitmix64(h);
        permIdx = h % P;
      } else {
        std::uint64_t r = idx;
        permIdx = r % P;
        r /= P;
        muW = r % M;
        v = r / M;
      }
      CheckInstance inst;
      inst.phi = ModelSet(std::vector<Interp>{{static_cast<Mask>(v)}});
      inst.mu = s.sets[muW];
      inst.renaming = Renaming::ofPermutation(s.perms[permIdx]);
      return checkInstance(PostulateId::RN, s.op, inst, s.sig);
    };
  };
  return plan;
}

SweepPlan planFlipSweep(const SweepSetup& s) {
  const std::uint64_t M = s.sets.size();
  const std::uint64_t V = std::uint64_t{1} << s.n;
  SweepPlan plan;
  plan.count = V * M * V;
  plan.makeWorker = [&s, M, V]() {
    return [&s, M, V](std::uint64_t idx) {
      std::uint64_t r = idx;
      const std::uint64_t flip = r % V;
      r /= V;
      const std::uint64_t muW = r % M;
      const std::uint64_t v = r / M;
      CheckInstance inst;
      inst.phi = ModelSet(std::vector<Interp>{{static_cast<Mask>(v)}});
      inst.mu = s.sets[muW];
      inst.flip = Interp{static_cast<Mask>(flip)};
      return checkInstance(PostulateId::RF, s.op, inst, s.sig);
    };
  };
  return plan;
}

SweepPlan planAdditionSweep(const SweepSetup& s) {
  const std::uint64_t V = std::uint64_t{1} << s.n;
  const std::uint64_t pairs = V * (V - 1);
  SweepPlan plan;
  plan.count = V * pairs * 2;  // |x| in {1, 2}
  plan.makeWorker = [&s, V, pairs]() {
    return [&s, V, pairs](std::uint64_t idx) {
      std::uint64_t r = idx;
      const int fresh = 1 + static_cast<int>(r % 2);
      r /= 2;
      const std::uint64_t pairIdx = r % pairs;
      const std::uint64_t v = r / pairs;
      const std::uint64_t w1 = pairIdx / (V - 1);
      std::uint64_t w2 = pairIdx % (V - 1);
      if (w2 >= w1) ++w2;
      CheckInstance inst;
      inst.phi = ModelSet(std::vector<Interp>{{static_cast<Mask>(v)}});
      inst.mu = ModelSet(
          std::vector<Interp>{{static_cast<Mask>(w1)}, {static_cast<Mask>(w2)}});
      inst.raFirst = Interp{static_cast<Mask>(w1)};
      inst.freshAtoms = fresh;
      return checkInstance(PostulateId::RA, s.op, inst, s.sig);
    };
  };
  return plan;
}

PostulateOutcome runPlan(const SweepPlan& plan, const SweepLimits& limits) {
  PostulateOutcome out;
  out.excludedDegenerate = plan.excluded;
  out.sampled = plan.sampled;
  const bool exhaustive = limits.exhaustive || limits.minimalCex;
  out.exhaustive = exhaustive;

  const auto start = Clock::now();
  int threads = limits.threads > 0
                    ? limits.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  if (plan.count < 4096) threads = 1;
  const std::uint64_t chunk = (plan.count + threads - 1) / threads;

  std::atomic<std::uint64_t> earliest{UINT64_MAX};
  std::atomic<bool> overBudget{false};
  std::vector<WorkerResult> results(threads);
  std::vector<std::thread> pool;

  auto cexKey = [](const Counterexample& c) {
    return std::pair<std::uint64_t, std::uint64_t>(c.instance.phi.size(),
                                                   c.instance.mu.size());
  };

  auto body = [&](int t) {
    auto eval = plan.makeWorker();
    WorkerResult& wr = results[t];
    const std::uint64_t lo = t * chunk;
    const std::uint64_t hi = std::min(plan.count, lo + chunk);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      if (!exhaustive && idx > earliest.load(std::memory_order_relaxed)) break;
      if ((idx & 0xFFF) == 0) {
        if (overBudget.load(std::memory_order_relaxed)) break;
        if (limits.budget.count() > 0 &&
            Clock::now() - start > limits.budget) {
          overBudget.store(true, std::memory_order_relaxed);
          break;
        }
      }
      auto cex = eval(idx);
      if (!cex) continue;
      ++wr.violations;
      if (idx < wr.firstIdx) {
        wr.firstIdx = idx;
        wr.firstCex = cex;
      }
      auto [cp, cm] = cexKey(*cex);
      if (std::tuple(cp, cm, idx) < std::tuple(wr.bestPhi, wr.bestMu, wr.bestIdx)) {
        wr.bestPhi = cp;
        wr.bestMu = cm;
        wr.bestIdx = idx;
        wr.bestCex = std::move(cex);
      }
      if (!exhaustive) {
        std::uint64_t cur = earliest.load(std::memory_order_relaxed);
        while (idx < cur &&
               !earliest.compare_exchange_weak(cur, idx,
                                               std::memory_order_relaxed)) {
        }
        break;  // later indices in this chunk cannot be earlier
      }
    }
  };

  if (threads == 1) {
    body(0);
  } else {
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(body, t);
    for (auto& th : pool) th.join();
  }
  if (overBudget.load()) throw LimitError("sweep exceeded its time budget");

  WorkerResult merged;
  for (auto& wr : results) {
    merged.violations += wr.violations;
    if (wr.firstIdx < merged.firstIdx) {
      merged.firstIdx = wr.firstIdx;
      merged.firstCex = wr.firstCex;
    }
    if (std::tuple(wr.bestPhi, wr.bestMu, wr.bestIdx) <
        std::tuple(merged.bestPhi, merged.bestMu, merged.bestIdx)) {
      merged.bestPhi = wr.bestPhi;
      merged.bestMu = wr.bestMu;
      merged.bestIdx = wr.bestIdx;
      merged.bestCex = wr.bestCex;
    }
  }

  out.pass = !merged.firstCex.has_value();
  if (out.pass) {
    out.instances = plan.count;
  } else if (exhaustive) {
    out.instances = plan.count;
    out.violations = merged.violations;
    out.first = limits.minimalCex ? merged.bestCex : merged.firstCex;
  } else {
    out.instances = merged.firstIdx + 1;
    out.violations = 1;
    out.first = merged.firstCex;
  }
  out.wallSeconds = std::chrono::duration<double>(Clock::now() - start).count();
  return out;
}

}  // namespace

CheckReport sweep(OperatorKind op, PostulateId p, int n,
                  const SweepLimits& limits) {
  if (n < 1) throw LimitError("sweeps need at least one atom");
  if (isMultiQuantified(p) && n > limits.maxMultiAtoms)
    throw LimitError("postulate " + std::string(postulateName(p)) +
                     " is capped at " + std::to_string(limits.maxMultiAtoms) +
                     " atoms");
  if (p == PostulateId::RN && n > 4)
    throw LimitError("RN is capped at 4 atoms (sampled at 4)");
  if (n > limits.maxSingleMuAtoms)
    throw LimitError("sweeps are capped at " +
                     std::to_string(limits.maxSingleMuAtoms) + " atoms");

  SweepSetup setup{op, p, n, Signature::letters(n), buildSetTable(n),
                   allPermutations(n), limits};

  SweepPlan plan;
  switch (p) {
    case PostulateId::R5:
    case PostulateId::R6:
    case PostulateId::R5c:
    case PostulateId::R6c:
      plan = planTripleSweep(setup);
      break;
    case PostulateId::RN:
      plan = planNeutralitySweep(setup);
      break;
    case PostulateId::RF:
      plan = planFlipSweep(setup);
      break;
    case PostulateId::RA:
      plan = planAdditionSweep(setup);
      break;
    default:
      plan = planPairSweep(setup);
      break;
  }

  CheckReport report;
  report.op = op;
  report.signatureSize = n;
  const auto start = Clock::now();
  report.perPostulate[p] = runPlan(plan, limits);
  report.wallSeconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

const std::map<std::pair<OperatorKind, PostulateId>, Expected>&
expectedMatrix() {
  using enum PostulateId;
  static const std::map<std::pair<OperatorKind, PostulateId>, Expected> m = [] {
    std::map<std::pair<OperatorKind, PostulateId>, Expected> out;
    auto set = [&](OperatorKind op, std::initializer_list<PostulateId> passes) {
      for (PostulateId p : kAllPostulates)
        out[{op, p}] = Expected::Fail;
      for (PostulateId p : passes) out[{op, p}] = Expected::Pass;
    };
    set(OperatorKind::DalalMinMin,
        {R1, R2, R3, R4, R5, R6, R5c, R6c, RN, RF, RA, RBoB});
    set(OperatorKind::DistMinMax,
        {R1, R3, R4, R5, R6, R5c, R6c, R7, R8, RN, RF, RA, RBoW});
    set(OperatorKind::SurpriseMinMax,
        {R1, R3, R4, R5c, R6c, RN, RF, RA, RBoWS});
    return out;
  }();
  return m;
}

MatrixReport runMatrix(int n, const SweepLimits& limits) {
  MatrixReport report;
  report.n = n;
  const auto start = Clock::now();
  for (OperatorKind op : kAllOperators) {
    for (PostulateId p : kAllPostulates) {
      int effective = n;
      if (isMultiQuantified(p)) effective = std::min(n, limits.maxMultiAtoms);
      if (p == PostulateId::RN) effective = std::min(n, 4);
      effective = std::min(effective, limits.maxSingleMuAtoms);
      CheckReport r = sweep(op, p, effective, limits);
      MatrixCell cell;
      cell.op = op;
      cell.postulate = p;
      cell.atoms = effective;
      cell.outcome = r.perPostulate.at(p);
      cell.expected = expectedMatrix().at({op, p});
      cell.matches = cell.outcome.pass == (cell.expected == Expected::Pass);
      report.matchesExpected = report.matchesExpected && cell.matches;
      report.cells.push_back(std::move(cell));
    }
  }
  report.wallSeconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

}  // namespace rev
