#include "doctest.h"
#include "sclab/group_spec.hpp"
#include "sclab/report.hpp"

using namespace sclab;

TEST_CASE("suite results round-trip through json") {
    SuiteResult s;
    CheckRecord r;
    r.check_id = "demo/one";
    r.inputs = json{{"group", "sym:4"}, {"prime", 2}};
    r.verdict = "PASS";
    r.witnesses = json{{"count", 3}, {"list", json::array({1, 2, 3})}};
    r.wall_ms = 1.5;
    s.records.push_back(r);
    r.check_id = "demo/two";
    r.verdict = "VACUOUS";
    s.records.push_back(r);

    json j = to_json(s);
    SuiteResult back = suite_from_json(j);
    REQUIRE(back.records.size() == s.records.size());
    for (size_t i = 0; i < s.records.size(); ++i) {
        CHECK(back.records[i].check_id == s.records[i].check_id);
        CHECK(back.records[i].inputs == s.records[i].inputs);
        CHECK(back.records[i].verdict == s.records[i].verdict);
        CHECK(back.records[i].witnesses == s.records[i].witnesses);
        CHECK(back.records[i].wall_ms == s.records[i].wall_ms);
    }
    CHECK(to_json(back) == j);
}

TEST_CASE("collection json export carries members and the order relation") {
    GroupTable G = build_group("dihedral:8");
    Collection C = collect(G, 2, Kind::Ce);
    json j = collection_json(C);
    CHECK(j["member_count"] == 4);
    CHECK(j["kind"] == "Ce");
    CHECK(j["members"].size() == 4);
    int rep_count = 0;
    for (const auto& m : j["members"]) {
        // element lists are sorted index arrays
        auto v = m["elements"].get<std::vector<int>>();
        CHECK(std::is_sorted(v.begin(), v.end()));
        if (m["is_class_rep"].get<bool>()) ++rep_count;
    }
    CHECK(rep_count == int(C.class_reps.size()));
    // order relation is a sparse pair list of strict inclusions
    for (const auto& pr : j["order_relation"]) {
        int a = pr[0].get<int>(), b = pr[1].get<int>();
        CHECK(C.members[a].members.is_subset_of(C.members[b].members));
    }
}

TEST_CASE("evidence and sharpness verdict strings") {
    GroupTable G = build_group("product(cyclic:2,sym:3)");
    Collection Ce = collect(G, 2, Kind::Ce);
    Collection S = collect(G, 2, Kind::S);
    auto rep = equivalence_evidence(Ce, S, Row::Normalizer, Scope::Plain);
    CHECK(verdict_of_evidence(rep) == "MISMATCH");
    json j = to_json(rep);
    CHECK(j["verdict"] == "MISMATCH");
    CHECK(j["per_subgroup"].size() == 1);

    auto rep2 = equivalence_evidence(S, S, Row::Normalizer, Scope::Full);
    CHECK(verdict_of_evidence(rep2) == "EVIDENCE_PASS");
}

TEST_CASE("certificate serialization") {
    GroupTable G = build_group("dihedral:8");
    auto cr = contractibility(poset_of(collect(G, 2, Kind::S)));
    REQUIRE(cr.certificate.has_value());
    json j = to_json(*cr.certificate);
    CHECK(j["terminal"].get<int>() >= 0);
    CHECK(j["steps"].size() == cr.certificate->steps.size());
}
