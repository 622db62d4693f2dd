#pragma once

#include <memory>
#include <string>

#include "json.hpp"

#include "hb/chain_map.hpp"
#include "hb/complex.hpp"
#include "hb/construction.hpp"
#include "hb/helly.hpp"

namespace hb {

using Json = nlohmann::json;

/// Parses JSON text; malformed text becomes InputError.
Json parse_json(const std::string& text);

// {"vertices":[...],"maximal_simplices":[[...],...]}, both sorted.
Json to_json(const SimplicialComplex& k);
/// "vertices" is optional; listed vertices missing from every simplex become isolated vertices.
SimplicialComplex complex_from_json(const Json& j);

// {"ambient":{...},"members":[{...},...]}
Json to_json(const SetFamily& f);
SetFamily family_from_json(const Json& j);

Json to_json(const Chain& c);
/// A list of simplices of one dimension; `grade` is used when the list is empty.
Chain chain_from_json(const Json& j, int grade);

// {"source":...,"target":...,"assignment":{"0,1":[[3,4],[5,6]],...}}
Json to_json(const SimplicialChainMap& g);
SimplicialChainMap chain_map_from_json(const Json& j);

/// {"complex":...,"family":...,"gamma":{key: chain},"phi":{key: indices}};
/// the empty simplex has key "".
Json to_json(const ConstrainedChainMap& c);
ConstrainedChainMap bundle_from_json(const Json& j);

const char* kind_name(ConstraintViolation::Kind kind);

}  // namespace hb
