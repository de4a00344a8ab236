#pragma once

#include <json.hpp>

#include "gridfloer/action.hpp"
#include "gridfloer/complex.hpp"
#include "gridfloer/detect.hpp"
#include "gridfloer/grid.hpp"
#include "gridfloer/polytope.hpp"

namespace gridfloer {

/// All serializers use ordered_json so identical inputs produce
/// byte-identical output.
using Json = nlohmann::ordered_json;

Json to_json(const GridDiagram& g);
Json to_json(const ComponentPartition& parts);
Json to_json(const LinkingMatrix& lk);
Json to_json(const MultigradedRanks& r);
Json to_json(const LatticePolytope& p);
Json to_json(const ShapeReport& s);
Json to_json(const LinkPolytopeReport& r);
Json action_verdict_json(const ActionOperator& op);
Json to_json(const LaurentPoly& p);
Json to_json(const DetectionReport& r);
Json to_json(const AuditReport& r);

}  // namespace gridfloer
