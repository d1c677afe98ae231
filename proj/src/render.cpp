#include "rev/render.hpp"

#include <algorithm>
#include <sstream>

namespace rev {

namespace {

// Pads to `width` counting display columns, not bytes (∅ is multi-byte).
int displayWidth(const std::string& s) {
  int w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

std::string padLeft(const std::string& s, int width) {
  int pad = width - displayWidth(s);
  return std::string(pad > 0 ? pad : 0, ' ') + s;
}

std::string checkMark(bool pass, bool ascii) {
  if (ascii) return pass ? "ok" : "XX";
  return pass ? "✓" : "✗";
}

}  // namespace

std::string renderTable(const Signature& sig, const DistanceTable& t,
                        bool ascii) {
  const bool surprise = t.kind == TableKind::Surprise;
  const int nr = static_cast<int>(t.rows.size());
  const int nc = static_cast<int>(t.cols.size());

  // Transposed to the familiar layout: rows of the rendering are models of
  // mu, columns are models of phi.
  std::vector<std::string> header;
  header.push_back(surprise ? "s" : "d_H");
  for (Interp v : t.rows) header.push_back(toWord(sig, v, ascii));
  if (surprise) {
    header.push_back("max");
  } else {
    header.push_back("min");
    header.push_back("max");
  }

  auto cellText = [&](int i, int j) {
    if (!surprise) return std::to_string(t.cells[i][j]);
    return std::to_string(t.raw[i][j]) + "-" + std::to_string(t.rowRef[i]);
  };

  std::vector<std::vector<std::string>> lines;
  int bestMin = *std::min_element(t.colMin.begin(), t.colMin.end());
  int bestMax = *std::min_element(t.colMax.begin(), t.colMax.end());
  for (int j = 0; j < nc; ++j) {
    std::vector<std::string> line;
    line.push_back(toWord(sig, t.cols[j], ascii));
    for (int i = 0; i < nr; ++i) line.push_back(cellText(i, j));
    if (!surprise)
      line.push_back((t.colMin[j] == bestMin ? "*" : "") +
                     std::to_string(t.colMin[j]));
    line.push_back((t.colMax[j] == bestMax ? "*" : "") +
                   std::to_string(t.colMax[j]));
    lines.push_back(std::move(line));
  }

  std::vector<int> width(header.size(), 0);
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = displayWidth(header[c]);
    for (const auto& line : lines)
      width[c] = std::max(width[c], displayWidth(line[c]));
  }

  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) out << (c == 1 || c == 1 + static_cast<std::size_t>(nr) ? " | " : "  ");
      out << padLeft(line[c], width[c]);
    }
    out << '\n';
  };
  emit(header);
  int total = 0;
  for (std::size_t c = 0; c < width.size(); ++c) total += width[c];
  out << std::string(total + 2 * (width.size() - 1) + 4, '-') << '\n';
  for (const auto& line : lines) emit(line);
  return out.str();
}

std::string renderResult(const Signature& sig, const RevisionResult& r,
                         OperatorKind k, bool ascii) {
  std::ostringstream out;
  out << "op: " << operatorName(k) << '\n';
  out << "result: " << toWords(sig, r.resultModels, ascii) << '\n';
  out << "formula: " << printFormula(r.resultFormula) << '\n';
  if (r.degeneratePrior)
    out << "note: inconsistent prior; all models of mu tie\n";
  if (!r.scorePerModel.empty()) {
    out << "scores:";
    for (const auto& [w, s] : r.scorePerModel)
      out << ' ' << toWord(sig, w, ascii) << '=' << s;
    out << '\n';
  }
  if (r.table) out << renderTable(sig, *r.table, ascii);
  return out.str();
}

std::string renderTrace(const DerivationTrace& t, bool ascii) {
  const Signature& ext = t.extendedSig;
  std::ostringstream out;
  out << "recipe: " << operatorName(t.kind) << '\n';
  if (t.adj) {
    out << "adjunction:";
    for (std::size_t i = 0; i < t.adj->priorModels.size(); ++i)
      out << ' ' << toWord(ext, t.adj->priorModels[i], ascii) << "+"
          << toWord(ext, t.adj->freshSets[i], ascii);
    out << '\n';
  }
  int index = 1;
  for (const TraceStep& s : t.steps) {
    out << "step " << index++ << " [" << s.rule << "]: ";
    switch (s.op) {
      case TraceStep::Op::Consider:
        out << "consider the prior models " << toWords(ext, s.output, ascii);
        break;
      case TraceStep::Op::Adjoin:
        out << "mint adjunction atoms; corrected prior "
            << toWords(ext, s.output, ascii);
        break;
      case TraceStep::Op::Flip:
        out << "flip by " << toWord(ext, s.param, ascii) << " -> "
            << toWords(ext, s.output, ascii);
        break;
      case TraceStep::Op::SelectMinCard:
        out << "epsilon keeps the smallest " << toWords(ext, s.output, ascii);
        break;
      case TraceStep::Op::SelectNearFull:
        out << "alpha keeps the largest " << toWords(ext, s.output, ascii);
        break;
      case TraceStep::Op::CollectWitness:
        out << "canonical witness for " << toWord(ext, s.param, ascii)
            << " -> " << toWords(ext, s.output, ascii);
        break;
      case TraceStep::Op::Union:
        out << "collect " << toWords(ext, s.output, ascii);
        break;
      case TraceStep::Op::Unflip:
        out << "unflip by " << toWord(ext, s.param, ascii) << " -> "
            << toWords(ext, s.output, ascii);
        break;
      case TraceStep::Op::Intersect:
        out << "intersect with mu -> " << toWords(ext, s.output, ascii);
        break;
    }
    out << '\n';
  }
  out << "final: " << toWords(ext, t.final, ascii) << '\n';
  return out.str();
}

std::string renderCounterexample(const Signature& sig, const Counterexample& c,
                                 bool ascii) {
  std::ostringstream out;
  out << postulateName(c.postulate) << " fails for " << operatorName(c.op)
      << ": phi=" << toWords(sig, c.instance.phi, ascii)
      << " mu=" << toWords(sig, c.instance.mu, ascii);
  if (c.instance.mu2) out << " mu2=" << toWords(sig, *c.instance.mu2, ascii);
  if (c.instance.renaming) {
    out << " renaming=(";
    for (int i = 0; i < sig.size(); ++i) {
      if (i) out << ' ';
      out << sig.atom(i) << ">" << sig.atom(c.instance.renaming->imageOf(i));
    }
    out << ')';
  }
  if (c.instance.flip) out << " flip=" << toWord(sig, *c.instance.flip, ascii);
  Signature wide = c.instance.freshAtoms > 0
                       ? sig.extended(c.instance.freshAtoms)
                       : sig;
  if (c.instance.raFirst)
    out << " kept=" << toWord(sig, *c.instance.raFirst, ascii)
        << " freshAtoms=" << c.instance.freshAtoms;
  out << "; lhs=" << toWords(wide, c.lhs, ascii)
      << " rhs=" << toWords(wide, c.rhs, ascii);
  return out.str();
}

std::string renderReport(const CheckReport& r, bool ascii) {
  Signature sig = Signature::letters(r.signatureSize);
  std::ostringstream out;
  for (const auto& [p, o] : r.perPostulate) {
    out << operatorName(r.op) << " x " << postulateName(p)
        << " (n=" << r.signatureSize << "): "
        << (o.pass ? "PASS" : "FAIL") << " over " << o.instances
        << " instances";
    if (o.excludedDegenerate > 0)
      out << " (" << o.excludedDegenerate
          << " inconsistent-prior instances excluded)";
    if (o.sampled) out << " [sampled]";
    out << " in " << static_cast<int>(o.wallSeconds * 1000) << " ms\n";
    if (!o.pass) {
      out << "  violations: "
          << (o.exhaustive ? std::to_string(o.violations) : ">=1") << '\n';
      if (o.first)
        out << "  " << renderCounterexample(sig, *o.first, ascii) << '\n';
    }
  }
  return out.str();
}

std::string renderMatrix(const MatrixReport& r, bool ascii) {
  std::ostringstream out;
  out << "postulate matrix (n=" << r.n << ")\n";
  std::vector<std::string> header{"postulate"};
  for (OperatorKind op : kAllOperators)
    header.push_back(std::string(operatorName(op)));
  std::vector<std::vector<std::string>> lines;
  for (PostulateId p : kAllPostulates) {
    std::vector<std::string> line{std::string(postulateName(p))};
    for (OperatorKind op : kAllOperators) {
      auto it = std::find_if(r.cells.begin(), r.cells.end(),
                             [&](const MatrixCell& c) {
                               return c.op == op && c.postulate == p;
                             });
      if (it == r.cells.end()) {
        line.push_back("-");
        continue;
      }
      std::string mark = checkMark(it->outcome.pass, ascii);
      mark += " " + std::to_string(it->outcome.instances);
      if (!it->matches) mark += " (expected " +
          std::string(it->expected == Expected::Pass ? "PASS" : "FAIL") + ")";
      line.push_back(mark);
    }
    lines.push_back(std::move(line));
  }
  std::vector<int> width(header.size(), 0);
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = displayWidth(header[c]);
    for (auto& line : lines)
      width[c] = std::max(width[c], displayWidth(line[c]));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) out << "  ";
      out << line[c] << std::string(width[c] - displayWidth(line[c]), ' ');
    }
    out << '\n';
  };
  emit(header);
  for (auto& line : lines) emit(line);
  out << (r.matchesExpected ? "matrix matches the expected results"
                            : "MATRIX DIVERGES FROM THE EXPECTED RESULTS")
      << '\n';
  return out.str();
}

}  // namespace rev
