#pragma once

#include <json.hpp>

#include <string>

#include "ut/characters.hpp"
#include "ut/group.hpp"
#include "ut/matrix.hpp"
#include "ut/orbits.hpp"
#include "ut/pairing.hpp"
#include "ut/rational.hpp"

// JSON forms used by the command line tool and the test fixtures.
// Rationals travel as exact "p/q" strings (bare integers accepted on
// input), matrices as {"rows", "cols", "entries"} with entries in row
// order, elements as a matrix plus a "kind" tag.  Loaders throw
// std::invalid_argument on malformed documents.

namespace ut {

using nlohmann::json;

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const json& j);

json to_json(const GroupElement& g);
json to_json(const AlgebraElement& x);
json to_json(const CoadjointElement& f);
GroupElement group_from_json(const json& j);
AlgebraElement algebra_from_json(const json& j);
CoadjointElement coadjoint_from_json(const json& j);

json to_json(const BlockPartition& p);
BlockPartition partition_from_json(const json& j);

std::string variant_name(OrbitVariant v);
OrbitVariant variant_from_name(const std::string& name);

json to_json(const OrbitParams& p);
OrbitParams params_from_json(const json& j);

// exact: modulus/phase as "p/q" strings; otherwise as doubles.
json to_json(const CharacterValue& v, bool exact);

json to_json(const MCEstimate& e);
json to_json(const DeltaReport& r);

}  // namespace ut
