#pragma once

#include "elliptica/arithcond.hpp"
#include "elliptica/bounds.hpp"
#include "elliptica/census.hpp"
#include "elliptica/exponents.hpp"
#include "elliptica/mixedhodge.hpp"
#include "elliptica/ratpoly.hpp"
#include "elliptica/space.hpp"
#include "elliptica/stabilize.hpp"
#include "elliptica/sturm.hpp"

#include <json.hpp>

namespace elliptica {

// Key order is part of the output contract, hence ordered_json. Integers that
// can exceed 64 bits and all rationals are decimal strings.
using Json = nlohmann::ordered_json;

Json to_json(const Integer& x);
Json to_json(const Rational& x);
Json to_json(const RatPoly& p);
Json to_json(const SturmCertificate& c);
Json to_json(const Leaf& leaf);
Json to_json(const ExponentData& d);
Json to_json(const InvariantReport& r);
Json to_json(const SacReport& r);
Json to_json(const Check& c);
Json to_json(const BoundsReport& r);
Json to_json(const HilaliVerdict& v);
Json to_json(const CensusEntry& e);
Json to_json(const CensusSummary& s);
Json to_json(const PowerCheck& c);
Json to_json(const ThresholdResult& r);
Json to_json(const MHPoly& m);
Json to_json(const BoxResult& r);
Json to_json(const BoxThresholdResult& r);

/// Accepts {"b": [...], "a": [...]}.
ExponentData exponent_data_from_json(const Json& j);
/// Accepts {"coeffs": [...]} with integer or "num/den" string entries.
RatPoly ratpoly_from_json(const Json& j);
MHPoly mhpoly_from_json(const Json& j);

}  // namespace elliptica
