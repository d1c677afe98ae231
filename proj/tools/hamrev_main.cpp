/* hamrev — belief revision by Hamming distance and relative surprise.
 *
 * Subcommands: models, revise, table, explain, check, matrix.
 * Exit codes: 0 success, 1 usage/parse/limit error, 2 verification divergence.
 */
#include <cctype>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rev/render.hpp"
#include "rev/serialize.hpp"

namespace {

using namespace rev;

struct Options {
  std::string atoms;  // comma list, or an integer (signature size)
  bool json = false;
  bool ascii = false;
  int maxN = 4;
  std::uint64_t seed = 0xC0FFEE;
  std::int64_t budgetMs = 0;
  bool exhaustive = false;
  bool minimalCex = false;
  int threads = 0;
};

std::vector<std::string> splitList(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

bool isInteger(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Signature for formula commands: --atoms wins, otherwise the atoms of the
// inputs in alphabetical order.
Signature formulaSignature(const Options& opt,
                           const std::vector<std::string>& texts) {
  if (!opt.atoms.empty()) {
    if (isInteger(opt.atoms)) return Signature::letters(std::stoi(opt.atoms));
    return Signature(splitList(opt.atoms));
  }
  std::vector<std::string> names;
  for (const auto& t : texts)
    for (const auto& a : atomsInText(t))
      if (std::find(names.begin(), names.end(), a) == names.end())
        names.push_back(a);
  std::sort(names.begin(), names.end());
  return Signature(std::move(names));
}

int sweepAtoms(const Options& opt) {
  int n = 3;
  if (!opt.atoms.empty())
    n = isInteger(opt.atoms) ? std::stoi(opt.atoms)
                             : static_cast<int>(splitList(opt.atoms).size());
  return std::min(n, opt.maxN);
}

SweepLimits sweepLimits(const Options& opt) {
  SweepLimits limits;
  limits.maxSingleMuAtoms = std::min(4, opt.maxN);
  limits.maxMultiAtoms = std::min(3, opt.maxN);
  limits.budget = std::chrono::milliseconds(opt.budgetMs);
  limits.exhaustive = opt.exhaustive;
  limits.minimalCex = opt.minimalCex;
  limits.seed = opt.seed;
  limits.threads = opt.threads;
  return limits;
}

OperatorKind parseOp(const std::string& name) {
  auto k = operatorFromName(name);
  if (!k) throw Error("unknown operator '" + name + "' (dalal|dmax|smax)");
  return *k;
}

int cmdModels(const Options& opt, const std::string& text) {
  Signature sig = formulaSignature(opt, {text});
  Formula f = parse(text, sig);
  ModelSet m = models(f, sig);
  if (opt.json) {
    Json out;
    out["signature"] = sig.atoms();
    out["formula"] = printFormula(f);
    out["models"] = toJson(sig, m);
    std::cout << out.dump(2) << '\n';
  } else {
    for (Interp w : m) std::cout << toWord(sig, w, opt.ascii) << '\n';
  }
  return 0;
}

int cmdRevise(const Options& opt, const std::string& opName,
              const std::string& phiText, const std::string& muText) {
  OperatorKind k = parseOp(opName);
  Signature sig = formulaSignature(opt, {phiText, muText});
  Formula phi = parse(phiText, sig);
  Formula mu = parse(muText, sig);
  RevisionResult r = revise(k, phi, mu, sig);
  if (opt.json)
    std::cout << toJson(sig, r, k).dump(2) << '\n';
  else
    std::cout << renderResult(sig, r, k, opt.ascii);
  return 0;
}

int cmdTable(const Options& opt, const std::string& kindName,
             const std::string& phiText, const std::string& muText) {
  TableKind kind;
  if (kindName == "distance")
    kind = TableKind::Distance;
  else if (kindName == "surprise")
    kind = TableKind::Surprise;
  else
    throw Error("unknown table kind '" + kindName + "' (distance|surprise)");
  Signature sig = formulaSignature(opt, {phiText, muText});
  ModelSet phiM = models(parse(phiText, sig), sig);
  ModelSet muM = models(parse(muText, sig), sig);
  DistanceTable t = buildTable(phiM, muM, kind);
  if (opt.json)
    std::cout << toJson(sig, t).dump(2) << '\n';
  else
    std::cout << renderTable(sig, t, opt.ascii);
  return 0;
}

int cmdExplain(const Options& opt, const std::string& opName,
               const std::string& phiText, const std::string& muText) {
  OperatorKind k = parseOp(opName);
  Signature sig = formulaSignature(opt, {phiText, muText});
  DerivationTrace t = explain(k, parse(phiText, sig), parse(muText, sig), sig);
  if (opt.json)
    std::cout << toJson(t).dump(2) << '\n';
  else
    std::cout << renderTrace(t, opt.ascii);
  return 0;
}

int cmdCheck(const Options& opt, const std::string& opName,
             const std::string& postName) {
  OperatorKind k = parseOp(opName);
  auto p = postulateFromName(postName);
  if (!p) throw Error("unknown postulate '" + postName + "'");
  CheckReport r = sweep(k, *p, sweepAtoms(opt), sweepLimits(opt));
  if (opt.json)
    std::cout << toJson(r).dump(2) << '\n';
  else
    std::cout << renderReport(r, opt.ascii);
  const bool pass = r.perPostulate.at(*p).pass;
  const bool expected = expectedMatrix().at({k, *p}) == Expected::Pass;
  return pass == expected ? 0 : 2;
}

int cmdMatrix(const Options& opt) {
  MatrixReport r = runMatrix(sweepAtoms(opt), sweepLimits(opt));
  if (opt.json)
    std::cout << toJson(r).dump(2) << '\n';
  else
    std::cout << renderMatrix(r, opt.ascii);
  return r.matchesExpected ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"belief revision by Hamming distance and relative surprise"};
  app.require_subcommand(1);

  Options opt;
  std::string opName = "dalal", kindName = "distance", postName;
  std::string text1, text2;

  auto addCommon = [&](CLI::App* cmd) {
    cmd->add_option("--atoms", opt.atoms,
                    "signature: comma-separated atoms or a size");
    cmd->add_flag("--json", opt.json, "JSON output");
    cmd->add_flag("--ascii", opt.ascii, "plain-ASCII text output");
  };
  auto addSweepFlags = [&](CLI::App* cmd) {
    cmd->add_option("--max-n", opt.maxN, "cap on the signature size");
    cmd->add_option("--seed", opt.seed, "seed for sampled neutrality checks");
    cmd->add_option("--budget-ms", opt.budgetMs, "sweep time budget (0 = none)");
    cmd->add_flag("--exhaustive", opt.exhaustive, "count every violation");
    cmd->add_flag("--minimal", opt.minimalCex,
                  "report a size-minimal counterexample");
    cmd->add_option("--threads", opt.threads, "worker threads (0 = auto)");
  };

  auto* cModels = app.add_subcommand("models", "list the models of a formula");
  cModels->add_option("formula", text1, "formula text")->required();
  addCommon(cModels);

  auto* cRevise = app.add_subcommand("revise", "revise phi by mu");
  cRevise->add_option("--op", opName, "dalal|dmax|smax");
  cRevise->add_option("phi", text1, "prior")->required();
  cRevise->add_option("mu", text2, "new information")->required();
  addCommon(cRevise);

  auto* cTable = app.add_subcommand("table", "distance or surprise table");
  cTable->add_option("--kind", kindName, "distance|surprise");
  cTable->add_option("phi", text1, "prior")->required();
  cTable->add_option("mu", text2, "new information")->required();
  addCommon(cTable);

  auto* cExplain =
      app.add_subcommand("explain", "postulate recipe for a revision");
  cExplain->add_option("--op", opName, "dalal|dmax|smax");
  cExplain->add_option("phi", text1, "prior")->required();
  cExplain->add_option("mu", text2, "new information")->required();
  addCommon(cExplain);

  auto* cCheck = app.add_subcommand("check", "sweep one postulate");
  cCheck->add_option("--op", opName, "dalal|dmax|smax");
  cCheck->add_option("--postulate", postName, "postulate id (R1..RBoWS)")
      ->required();
  addCommon(cCheck);
  addSweepFlags(cCheck);

  auto* cMatrix =
      app.add_subcommand("matrix", "full operator-by-postulate matrix");
  addCommon(cMatrix);
  addSweepFlags(cMatrix);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (cModels->parsed()) return cmdModels(opt, text1);
    if (cRevise->parsed()) return cmdRevise(opt, opName, text1, text2);
    if (cTable->parsed()) return cmdTable(opt, kindName, text1, text2);
    if (cExplain->parsed()) return cmdExplain(opt, opName, text1, text2);
    if (cCheck->parsed()) return cmdCheck(opt, opName, postName);
    if (cMatrix->parsed()) return cmdMatrix(opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " at position " << e.position;
    if (!e.expected.empty()) std::cerr << " (expected " << e.expected << ")";
    std::cerr << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
