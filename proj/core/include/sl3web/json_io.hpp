#pragma once

// JSON forms of every value type. Output keeps the documented key order;
// input is strict: every value must be a JSON integer (or the documented
// string), required keys must be present and unknown keys are rejected.
// Parse failures throw Error(Malformed).

#include <nlohmann/json.hpp>

#include "sl3web/annulus_webs.hpp"
#include "sl3web/decomposition.hpp"
#include "sl3web/errors.hpp"
#include "sl3web/global_coords.hpp"
#include "sl3web/oracle.hpp"
#include "sl3web/pants_coords.hpp"

namespace sl3web {

using Json = nlohmann::ordered_json;

Json to_json(const ShearVector& x);
Json to_json(const PantsTuple& t);
Json to_json(const TwistTuple& t);
Json to_json(const AnnulusDescriptor& d);  // includes the derived "kind"
Json to_json(const DecompositionGraph& g);
Json to_json(const GlobalCoordinate& c);
Json to_json(const SurfaceWebDescriptor& w);
Json to_json(const TorusCoordinate& c);
Json to_json(const BoxSpec& b);
Json to_json(const OracleReport& r, bool include_timing = true);
Json to_json(const Error& e);

template <class T>
T from_json(const Json& j);

template <> ShearVector from_json<ShearVector>(const Json& j);
template <> PantsTuple from_json<PantsTuple>(const Json& j);
template <> TwistTuple from_json<TwistTuple>(const Json& j);
// Runs validate(); a "kind" key, if present, must match the derived kind.
template <> AnnulusDescriptor from_json<AnnulusDescriptor>(const Json& j);
// Structural parse only; call validate_graph() for the topological checks.
template <> DecompositionGraph from_json<DecompositionGraph>(const Json& j);
template <> GlobalCoordinate from_json<GlobalCoordinate>(const Json& j);
template <> SurfaceWebDescriptor from_json<SurfaceWebDescriptor>(const Json& j);
template <> TorusCoordinate from_json<TorusCoordinate>(const Json& j);

// Parses text, mapping syntax errors to Malformed.
Json parse_json(std::string_view text);

}  // namespace sl3web
