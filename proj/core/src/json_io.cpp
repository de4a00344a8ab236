#include "gridfloer/json_io.hpp"

namespace gridfloer {

Json to_json(const GridDiagram& g) {
    Json j;
    j["n"] = g.n;
    j["o_rows"] = g.o_rows;
    j["x_rows"] = g.x_rows;
    if (!g.name.empty()) j["name"] = g.name;
    return j;
}

Json to_json(const ComponentPartition& parts) {
    Json j;
    j["count"] = parts.count;
    j["column_owner"] = parts.column_owner;
    j["row_owner"] = parts.row_owner;
    j["marks_per_component"] = parts.marks_per_component;
    return j;
}

Json to_json(const LinkingMatrix& lk) {
    Json j;
    j["count"] = lk.count;
    j["matrix"] = lk.lk;
    return j;
}

Json to_json(const MultigradedRanks& r) {
    Json j;
    j["n"] = r.n;
    j["components"] = r.components;
    j["entries"] = Json::array();
    for (const auto& [h, rank] : r.entries) {
        Json e;
        e["maslov"] = h.maslov;
        e["alex2"] = h.alex2;
        e["rank"] = rank;
        j["entries"].push_back(std::move(e));
    }
    j["total"] = r.total();
    return j;
}

Json to_json(const LatticePolytope& p) {
    Json j;
    j["vertices"] = p.vertices;
    j["facets"] = Json::array();
    for (const Facet& f : p.facets) {
        Json e;
        e["normal"] = f.normal;
        e["offset"] = f.offset;
        j["facets"].push_back(std::move(e));
    }
    j["shape"] = to_json(polytope_shape(p));
    return j;
}

Json to_json(const ShapeReport& s) {
    Json j;
    j["vertex_count"] = s.vertex_count;
    j["is_axis_box"] = s.is_axis_box;
    j["is_centrally_symmetric"] = s.is_centrally_symmetric;
    j["is_full_dimensional"] = s.is_full_dimensional;
    return j;
}

Json to_json(const LinkPolytopeReport& r) {
    Json j;
    j["polytope"] = to_json(r.polytope);
    j["dual_thurston_valid"] = r.dual_thurston_valid;
    if (r.dual_thurston_valid)
        j["dual_thurston"] = to_json(r.dual_thurston);
    else
        j["dual_thurston_reason"] = r.dual_thurston_reason;
    return j;
}

Json action_verdict_json(const ActionOperator& op) {
    Json j;
    j["pair"] = {op.pair_from, op.pair_to};
    j["dim"] = op.dim;
    j["rank"] = op.rank;
    j["free"] = (2 * op.rank == op.dim);
    return j;
}

Json to_json(const LaurentPoly& p) {
    Json j = Json::array();
    for (const auto& [e, c] : p) {
        Json t;
        t["exponents"] = e;
        t["coefficient"] = c;
        j.push_back(std::move(t));
    }
    return j;
}

namespace {

Json verdict_json(const Verdict& v) {
    Json j;
    j["value"] = v.value;
    j["why"] = v.why;
    return j;
}

}  // namespace

Json to_json(const DetectionReport& r) {
    Json j;
    j["components"] = r.components;
    j["lfr"] = r.lfr;
    j["is_unknot"] = verdict_json(r.is_unknot);
    j["is_unlink"] = verdict_json(r.is_unlink);
    j["is_hopf_link"] = verdict_json(r.is_hopf_link);
    j["is_second_smallest_class"] = verdict_json(r.is_second_smallest_class);
    j["is_split"] = verdict_json(r.is_split);
    j["fibered_top_certificate"] = verdict_json(r.fibered_top_certificate);
    j["alexander"] = to_json(r.alexander);
    return j;
}

Json to_json(const AuditReport& r) {
    Json j;
    j["component"] = r.component;
    j["lfr_link"] = r.lfr_link;
    j["lfr_sublink"] = r.lfr_sublink;
    j["equality"] = r.equality;
    j["shift_vector"] = r.shift_vector;
    j["prop_applicable"] = r.prop_applicable;
    j["predicted"] = {{"linking_zero", r.predicted.linking_zero},
                      {"sublink_nonsplit", r.predicted.sublink_nonsplit}};
    j["observed"] = {{"linking_zero", r.observed.linking_zero},
                     {"sublink_nonsplit", r.observed.sublink_nonsplit}};
    j["consistent"] = r.consistent;
    j["figure_accounting"] = Json::array();
    for (const FigureRow& row : r.figure_accounting) {
        Json e;
        e["grading"] = row.grading2;
        e["dots"] = row.dots;
        e["surviving"] = row.surviving;
        j["figure_accounting"].push_back(std::move(e));
    }
    return j;
}

}  // namespace gridfloer
