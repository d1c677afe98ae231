#pragma once

#include <string>

#include "rev/postulates.hpp"

namespace rev {

// Aligned text table: one row per model of mu, one
// column per model of phi, aggregate column(s) on the right with the
// preferred entries starred. Surprise cells render decomposed ("4-0").
std::string renderTable(const Signature& sig, const DistanceTable& t,
                        bool ascii = false);

std::string renderResult(const Signature& sig, const RevisionResult& r,
                         OperatorKind k, bool ascii = false);

// Numbered plain-text proof sketch, one line per step.
std::string renderTrace(const DerivationTrace& t, bool ascii = false);

std::string renderCounterexample(const Signature& sig, const Counterexample& c,
                                 bool ascii = false);

std::string renderReport(const CheckReport& r, bool ascii = false);

// Operator-by-postulate grid with pass/fail marks and expectation diffs.
std::string renderMatrix(const MatrixReport& r, bool ascii = false);

}  // namespace rev
