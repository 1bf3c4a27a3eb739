#include "sclab/report.hpp"

namespace sclab {

bool SuiteResult::all_expected() const {
    for (const auto& r : records)
        if (r.verdict == "FAIL" || r.verdict == "MISMATCH_UNEXPECTED") return false;
    return true;
}

json to_json(const CheckRecord& r) {
    return json{{"check_id", r.check_id},
                {"inputs", r.inputs},
                {"verdict", r.verdict},
                {"witnesses", r.witnesses},
                {"wall_ms", r.wall_ms}};
}

json to_json(const SuiteResult& s) {
    json arr = json::array();
    for (const auto& r : s.records) arr.push_back(to_json(r));
    return json{{"records", arr}};
}

SuiteResult suite_from_json(const json& j) {
    SuiteResult out;
    for (const auto& rj : j.at("records")) {
        CheckRecord r;
        r.check_id = rj.at("check_id").get<std::string>();
        r.inputs = rj.at("inputs");
        r.verdict = rj.at("verdict").get<std::string>();
        r.witnesses = rj.at("witnesses");
        r.wall_ms = rj.at("wall_ms").get<double>();
        out.records.push_back(std::move(r));
    }
    return out;
}

json to_json(const HomologyReport& h) {
    json tors = json::array();
    for (const auto& t : h.torsion) tors.push_back(t);
    return json{{"prime", h.prime},       {"betti_int", h.betti_int}, {"torsion", tors},
                {"betti_mod_p", h.betti_p}, {"euler", h.euler_reduced}, {"pi0", h.pi0}};
}

json collection_json(const Collection& C) {
    json members = json::array();
    for (int i = 0; i < C.size(); ++i) {
        json m;
        m["elements"] = C.members[i].elements();
        m["order"] = C.members[i].order;
        m["class"] = C.class_of[i];
        m["is_class_rep"] =
            std::find(C.class_reps.begin(), C.class_reps.end(), i) != C.class_reps.end();
        members.push_back(std::move(m));
    }
    json rel = json::array();
    for (int i = 0; i < C.size(); ++i)
        for (int j = 0; j < C.size(); ++j)
            if (i != j && C.member_leq(i, j)) rel.push_back(json::array({i, j}));
    return json{{"kind", kind_to_string(C.kind)},
                {"prime", C.p},
                {"member_count", C.size()},
                {"class_count", int(C.class_reps.size())},
                {"members", members},
                {"order_relation", rel}};
}

json to_json(const EvidenceReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back(json{{"H_class_id", row.h_class_id},
                            {"H_order", row.h_order},
                            {"left_betti", to_json(row.left)},
                            {"right_betti", to_json(row.right)},
                            {"verdict", row.match ? "MATCH" : "MISMATCH"}});
    return json{{"row", row_to_string(r.row)},
                {"scope", scope_to_string(r.scope)},
                {"verdict", verdict_of_evidence(r)},
                {"mismatch_class", r.mismatch_class},
                {"per_subgroup", rows}};
}

json to_json(const SharpnessReport& r) {
    json table = json::array();
    for (size_t n = 0; n < r.table.size(); ++n) {
        json row;
        row["n"] = int(n);
        row["target_dim"] = r.table[n][0];
        row["lim0"] = r.table[n][1];
        row["comparison"] = json{{"rank", r.table[n][2]},
                                 {"injective", r.table[n][2] == r.table[n][0]},
                                 {"surjective", r.table[n][2] == r.table[n][1]}};
        json lims = json::array();
        for (size_t i = 3; i < r.table[n].size(); ++i) lims.push_back(r.table[n][i]);
        row["higher_limits"] = lims;
        table.push_back(std::move(row));
    }
    json out{{"collection", kind_to_string(r.kind)},
             {"type", row_to_string(r.type)},
             {"n_max", r.n_max},
             {"i_max", r.i_max},
             {"verdict", to_string(r.state)},
             {"rows", table},
             {"detail", r.detail}};
    if (r.fail_n >= 0) out["first_failure"] = json::array({r.fail_n, r.fail_i});
    if (!r.bredon_dims.empty()) out["bredon_cross_check"] = r.bredon_dims;
    return out;
}

json to_json(const ContractionCertificate& c) {
    json steps = json::array();
    for (const auto& s : c.steps)
        steps.push_back(json{{"map", s.image_of},
                             {"direction", s.direction == Direction::GE ? "GE" : "LE"}});
    return json{{"steps", steps}, {"terminal", c.terminal}};
}

std::string verdict_of_evidence(const EvidenceReport& r) {
    return r.evidence_pass ? "EVIDENCE_PASS" : "MISMATCH";
}

}  // namespace sclab
