#include "doctest.h"
#include "sclab/equivalence.hpp"
#include "sclab/group_spec.hpp"
#include "sclab/poset.hpp"

using namespace sclab;

TEST_CASE("check_endomorphism on the sylow-intersection map over S(S4)") {
    GroupTable G = build_group("sym:4");
    Collection S = collect(G, 2, Kind::S);
    CHECK(S.size() == 19);
    auto F = endo_sylow_intersection(S);
    auto rep = check_endomorphism(S, F);
    CHECK(rep.pass);
    CHECK(rep.conclusion_orbit_row);
    CHECK(rep.conclusion_poset_row);
    CHECK(rep.image_members.size() == 4);
    Collection I = collect(G, 2, Kind::I);
    for (int i : rep.image_members) CHECK(I.index_of(S.members[i].members) >= 0);

    // spot values: F fixes the normal Klein subgroup
    Subgroup V = o_p(G, full_subgroup(G), 2);
    int vi = S.index_of(V.members);
    REQUIRE(vi >= 0);
    CHECK(F.image_of[vi] == vi);
}

TEST_CASE("check_endomorphism on the zeta map over A(D8)") {
    GroupTable G = build_group("dihedral:8");
    Collection A = collect(G, 2, Kind::A);
    auto F = endo_Z(A);
    auto rep = check_endomorphism(A, F);
    CHECK(rep.pass);
    CHECK(rep.conclusion_orbit_row);
    CHECK(rep.conclusion_conjugacy_row);
    CHECK(rep.conclusion_poset_row);
    CHECK(rep.image_members.size() == 3);

    // the center is fixed
    Subgroup Z = center_of(G, full_subgroup(G));
    int zi = A.index_of(Z.members);
    REQUIRE(zi >= 0);
    CHECK(F.image_of[zi] == zi);
    // a reflection subgroup maps to the Klein group containing it and the center
    for (int i = 0; i < A.size(); ++i) {
        if (A.members[i].order != 2 || A.members[i].members == Z.members) continue;
        int img = F.image_of[i];
        CHECK(A.members[img].order == 4);
        CHECK(A.members[i].members.is_subset_of(A.members[img].members));
        CHECK(Z.members.is_subset_of(A.members[img].members));
    }
}

TEST_CASE("identity endomorphism always passes") {
    GroupTable G = build_group("alt:4");
    Collection C = collect(G, 2, Kind::S);
    auto rep = check_endomorphism(C, identity_endo(C));
    CHECK(rep.pass);
    CHECK(int(rep.image_members.size()) == C.size());
}

TEST_CASE("closure checks match the standard closure facts") {
    for (const char* spec : {"sym:4", "dihedral:8", "alt:4", "product(cyclic:2,sym:3)", "sym:3"}) {
        GroupTable G = build_group(spec);
        CHECK(closure_check(collect(G, 2, Kind::Ce), ClosureMode::Overgroups).closed);
        CHECK(closure_check(collect(G, 2, Kind::E), ClosureMode::Subgroups).closed);
        CHECK(closure_check(collect(G, 2, Kind::S), ClosureMode::Overgroups).closed);
        CHECK(closure_check(collect(G, 2, Kind::S), ClosureMode::Subgroups).closed);
    }
    // A(S4) is not closed under overgroups: a C2 inside a cyclic C4 witnesses
    GroupTable G = build_group("sym:4");
    auto repo = closure_check(collect(G, 2, Kind::A), ClosureMode::Overgroups);
    CHECK_FALSE(repo.closed);
    REQUIRE(repo.witness_subgroup.has_value());
    CHECK_FALSE(is_elementary_abelian(G, *repo.witness_subgroup, 2));
}

TEST_CASE("zig-zag certificates verify") {
    GroupTable G = build_group("sym:4");
    Collection S = collect(G, 2, Kind::S);
    Collection B = collect(G, 2, Kind::B);
    // pick a non-radical member: a transposition subgroup
    for (int m = 0; m < S.size(); ++m) {
        if (B.index_of(S.members[m].members) >= 0) continue;
        std::vector<int> over;
        for (int j = 0; j < S.size(); ++j)
            if (j != m && S.member_leq(m, j)) over.push_back(j);
        Poset sub;
        auto cert = radical_zigzag(S, m, over, &sub);
        std::string why;
        CHECK_MESSAGE(verify_certificate(sub, cert, &why), why);
    }
    // Frattini zig-zag on S(D8)_{<D8}
    GroupTable D8 = build_group("dihedral:8");
    Collection SD = collect(D8, 2, Kind::S);
    int top = SD.index_of(full_subgroup(D8).members);
    REQUIRE(top >= 0);
    std::vector<int> under;
    for (int j = 0; j < SD.size(); ++j)
        if (j != top && SD.member_leq(j, top)) under.push_back(j);
    Poset sub;
    auto cert = frattini_zigzag(SD, top, under, &sub);
    std::string why;
    CHECK_MESSAGE(verify_certificate(sub, cert, &why), why);

    // constant map on a one-point poset
    Poset pt(1);
    ContractionCertificate cc;
    ContractionStep st;
    st.image_of = {0};
    st.direction = Direction::GE;
    cc.steps = {st};
    cc.terminal = 0;
    CHECK(verify_certificate(pt, cc));
}

TEST_CASE("removal of non-radical classes from S(S4) is certified") {
    GroupTable G = build_group("sym:4");
    Collection S = collect(G, 2, Kind::S);
    Collection B = collect(G, 2, Kind::B);
    auto rep = removal_check(S, B, RemovalVariant::AboveContractible);
    CHECK(rep.pass);
    CHECK(rep.removed.size() == 4);  // transpositions, double transpositions, C4, non-normal Kleins
    for (auto& r : rep.removed) CHECK(r.status == ContractStatus::CERTIFIED);
}

TEST_CASE("removing the normal Klein class from S(S4) fails the hypothesis") {
    GroupTable G = build_group("sym:4");
    Collection S = collect(G, 2, Kind::S);
    Subgroup V = o_p(G, full_subgroup(G), 2);
    std::vector<Subgroup> rest;
    for (int i = 0; i < S.size(); ++i)
        if (!(S.members[i].members == V.members)) rest.push_back(S.members[i]);
    Collection Sminus = make_custom_collection(G, 2, rest);
    auto rep = removal_check(S, Sminus, RemovalVariant::AboveContractible);
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.removed.size() == 1);
    CHECK(rep.removed[0].status == ContractStatus::NOT_CONTRACTIBLE);
}

TEST_CASE("vacuous removal passes") {
    GroupTable G = build_group("dihedral:8");
    Collection S = collect(G, 2, Kind::S);
    auto rep = removal_check(S, S, RemovalVariant::AboveContractible);
    CHECK(rep.pass);
    CHECK(rep.removed.empty());
}

TEST_CASE("removal variant 2: S to A via Frattini hypotheses") {
    GroupTable G = build_group("sym:4");
    Collection S = collect(G, 2, Kind::S);
    Collection A = collect(G, 2, Kind::A);
    auto rep = removal_check(S, A, RemovalVariant::BelowContractible);
    CHECK(rep.pass);
}

TEST_CASE("removal variant 3: equivariant links for S to B on S4") {
    GroupTable G = build_group("sym:4");
    Collection S = collect(G, 2, Kind::S);
    Collection B = collect(G, 2, Kind::B);
    auto rep = removal_check(S, B, RemovalVariant::EquivariantLink);
    CHECK(rep.pass);
}
