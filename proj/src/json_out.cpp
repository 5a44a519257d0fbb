#include "ndl/json_out.hpp"

namespace ndl {

Json to_json(const DegreeList& l) {
    return Json(l.entries());
}

Json to_json(const ProfileSet& p) {
    Json arr = Json::array();
    for (const auto& l : p.lists())
        arr.push_back(to_json(l));
    return arr;
}

Json to_json(const TwoSwitch& s) {
    return Json::array({s.v1, s.v2, s.w1, s.w2});
}

Json to_json(const SwitchSequence& seq) {
    Json arr = Json::array();
    for (const auto& s : seq)
        arr.push_back(to_json(s));
    return arr;
}

Json to_json(const ProofGapEvent& e) {
    Json j;
    j["stage"] = e.stage == ProofGapEvent::Stage::canonicalize_no_y
                     ? "CANONICALIZE_NO_Y"
                     : "RECURSION_NDL_MISMATCH";
    j["w"] = e.w;
    j["z"] = e.z;
    j["x"] = e.x;
    j["snapshot"] = e.snapshot;
    return j;
}

Json to_json(const TransformTelemetry& t) {
    Json j;
    j["recursion_depth"] = t.recursion_depth;
    j["canonicalization_switches"] = t.canonicalization_switches;
    j["fallback_invocations"] = t.fallback_invocations;
    j["lift_replay_failures"] = t.lift_replay_failures;
    j["glue_repairs"] = t.glue_repairs;
    Json gaps = Json::array();
    for (const auto& e : t.gap_events)
        gaps.push_back(to_json(e));
    j["proof_gap_events"] = gaps;
    return j;
}

Json to_json(const TransformResult& r) {
    Json j;
    j["seq_g"] = to_json(r.seq_g);
    j["seq_h"] = to_json(r.seq_h);
    j["bijection"] = Json(r.bijection.mapping());
    j["telemetry"] = to_json(r.telemetry);
    return j;
}

Json to_json(const TransformOutcome& o) {
    Json j;
    switch (o.status) {
    case TransformStatus::ok: j["status"] = "OK"; break;
    case TransformStatus::not_equivalent: j["status"] = "NOT_EQUIVALENT"; break;
    case TransformStatus::diameter_violation: j["status"] = "DIAMETER_VIOLATION"; break;
    }
    if (o.result) {
        Json r = to_json(*o.result);
        for (auto& [key, value] : r.items())
            j[key] = value;
    }
    return j;
}

Json to_json(const AnomalyScore& s) {
    Json j;
    j["vertex"] = s.vertex;
    j["degree"] = s.degree;
    j["score"] = s.score;
    j["cohort_size"] = s.cohort_size;
    return j;
}

Json to_json(const VerificationReport& r, bool include_elapsed) {
    Json j;
    j["n"] = r.n;
    j["counts"] = Json{{"graphs_total", r.graphs_total},
                       {"diameter2_graphs", r.diameter2_graphs}};
    Json violations = Json::array();
    for (const auto& v : r.shell2_violations)
        violations.push_back(Json{{"graph", v.graph6},
                                  {"vertex", v.vertex},
                                  {"degree", v.degree},
                                  {"shell2_size", v.shell2_size}});
    j["shell2_violations"] = violations;
    j["partition_by_ndl"] = Json(r.partition_by_ndl);
    j["partition_by_n2dl"] = Json(r.partition_by_n2dl);
    j["reachability_components"] = Json(r.reachability_components_sizes);
    Json mismatches = Json::array();
    for (const auto& m : r.mismatches)
        mismatches.push_back(Json{{"kind", m.kind},
                                  {"graph_a", m.graph_a},
                                  {"graph_b", m.graph_b},
                                  {"detail", m.detail}});
    j["mismatches"] = mismatches;
    j["transform_pairs_checked"] = r.transform_pairs_checked;
    j["proofgap_rate"] = r.proofgap_rate;
    j["fallback_rate"] = r.fallback_rate;
    j["mixed_pairs_equal_n2dl"] = r.mixed_pairs_equal_n2dl;
    j["mixed_pairs_equal_n2dl_reachable"] = r.mixed_pairs_equal_n2dl_reachable;
    if (include_elapsed)
        j["elapsed_seconds"] = r.elapsed_seconds;
    return j;
}

} // namespace ndl
