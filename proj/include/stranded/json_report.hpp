#pragma once

#include <json.hpp>

#include "stranded/amplitude.hpp"
#include "stranded/enumerate.hpp"
#include "stranded/faces.hpp"
#include "stranded/groups.hpp"
#include "stranded/structure.hpp"
#include "stranded/verify.hpp"

namespace stranded {

// nlohmann::json keeps object keys sorted, so dumps are byte-stable for
// identical content.
using json = nlohmann::json;

json graph_json(const StrandedGraph& g);
json faces_json(const StrandedGraph& g, const FaceSet& fs);
json checks_json(const StructureReport& r);
json amplitude_json(const AmplitudeResult& r);
json verify_json(const VerifyReport& r);
json census_json(const CensusTable& t);

}  // namespace stranded
