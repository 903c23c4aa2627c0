#pragma once

#include <json.hpp>

#include "sgc/constructive.hpp"
#include "sgc/cover.hpp"
#include "sgc/invariants.hpp"
#include "sgc/tree.hpp"

namespace sgc {

using Json = nlohmann::ordered_json;

Json to_json(const SpanningTree& t);
Json to_json(const CaterpillarCertificate& c);
Json to_json(const PathCover& c);
Json to_json(const CycleCover& c);
Json to_json(const Fan& f);
Json to_json(const CycleWitness& c);
Json to_json(const Bipartition& p);

/// Inverse of to_json for the two certificate types that are replayed.
SpanningTree tree_from_json(const Json& j);
CaterpillarCertificate certificate_from_json(const Json& j);

}  // namespace sgc
