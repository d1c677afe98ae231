#pragma once

#include <json.hpp>

#include "rev/postulates.hpp"

namespace rev {

// JSON views of the domain types. Interpretations serialize as atom lists in
// signature order ([] for the empty set); key order is fixed, so output is
// byte-deterministic for fixed inputs and seed.
using Json = nlohmann::ordered_json;

Json toJson(const Signature& sig, Interp v);
Json toJson(const Signature& sig, const ModelSet& m);
Json toJson(const Signature& sig, const DistanceTable& t);
Json toJson(const Signature& sig, const RevisionResult& r, OperatorKind k);
Json toJson(const DerivationTrace& t);
Json toJson(const Signature& sig, const Counterexample& c);
Json toJson(const CheckReport& r);
Json toJson(const MatrixReport& r);

}  // namespace rev
