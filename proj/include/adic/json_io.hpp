#pragma once

// JSON encodings of series, points, subsets and rings. Every rational travels
// as a string "n" or "a/b". Decoders reject unknown keys with SchemaError.

#include <nlohmann/json.hpp>

#include "adic/huber.hpp"
#include "adic/ordgroup.hpp"
#include "adic/points.hpp"
#include "adic/ring.hpp"
#include "adic/tate.hpp"
#include "adic/topology.hpp"

namespace adic::json {

using Json = nlohmann::ordered_json;

Rational parseRational(const Json& j, const std::string& where);
Json toJson(const Rational& x);

TateSeries parseSeries(const Json& j, Prime p, const std::string& where);
Json toJson(const TateSeries& f);

std::vector<TateSeries> parseSeriesList(const Json& j, Prime p, const std::string& where);
Json toJson(const std::vector<TateSeries>& fs);

PointDescriptor parsePoint(const Json& j, Prime p, const std::string& where);
Json toJson(const PointDescriptor& x);

RationalSubset parseSubset(const Json& j, Prime p, const std::string& where);
Json toJson(const RationalSubset& u);

/// Localized descriptors are rebuilt through localize, so they are validated.
RingDescriptor parseRing(const Json& j, Prime p, const std::string& where);
Json toJson(const RingDescriptor& r);

ConvexSubgroup parseConvexSubgroup(const Json& j, const std::string& where);

long parseInteger(const Json& j, const std::string& where);

/// Throws SchemaError unless j is an object whose keys are all in allowed and
/// which has every key in required.
void checkObject(const Json& j, std::initializer_list<const char*> allowed,
                 std::initializer_list<const char*> required, const std::string& where);

}  // namespace adic::json
