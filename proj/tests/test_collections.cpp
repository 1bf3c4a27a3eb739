#include "doctest.h"
#include "oracles.hpp"
#include "sclab/collection.hpp"
#include "sclab/group_spec.hpp"

using namespace sclab;

namespace {

int count_of(const GroupTable& G, int p, Kind k) { return collect(G, p, k).size(); }

bool same_members(const Collection& C, const std::vector<Subgroup>& expect) {
    if (C.size() != int(expect.size())) return false;
    for (int i = 0; i < C.size(); ++i)
        if (!(C.members[i].members == expect[i].members)) return false;
    return true;
}

}  // namespace

TEST_CASE("collections of D8 at p=2") {
    GroupTable G = build_group("dihedral:8");
    CHECK(count_of(G, 2, Kind::S) == 9);
    CHECK(count_of(G, 2, Kind::B) == 1);
    CHECK(count_of(G, 2, Kind::Ce) == 4);
    CHECK(count_of(G, 2, Kind::D) == 1);
    CHECK(count_of(G, 2, Kind::A) == 7);
    CHECK(count_of(G, 2, Kind::Z) == 3);
    CHECK(count_of(G, 2, Kind::E) == 1);
    CHECK(count_of(G, 2, Kind::I) == 1);
}

TEST_CASE("E of S4 has 4 members in 2 classes") {
    GroupTable G = build_group("sym:4");
    Collection E = collect(G, 2, Kind::E);
    CHECK(E.size() == 4);
    CHECK(E.class_reps.size() == 2);
}

TEST_CASE("unique Sylow of Z/6 at p=2") {
    GroupTable G = build_group("cyclic:6");
    CHECK(count_of(G, 2, Kind::S) == 1);
    CHECK(collect(G, 5, Kind::S).empty());
}

TEST_CASE("membership flags on S4 and D8") {
    GroupTable S4 = build_group("sym:4");
    Subgroup V = o_p(S4, full_subgroup(S4), 2);
    auto fl = membership_tests(S4, 2, V);
    CHECK(fl.radical);
    // a double transposition is not centric in S4
    for (int x = 1; x < S4.n; ++x) {
        if (S4.element_order(x) != 2) continue;
        Subgroup Q = closure(S4, {x});
        if (centralizer(S4, Q).order == 8) {
            CHECK_FALSE(membership_tests(S4, 2, Q).centric);
            break;
        }
    }
    GroupTable D8 = build_group("dihedral:8");
    // the cyclic 4 inside D8: centric but not radical
    for (int x = 1; x < D8.n; ++x)
        if (D8.element_order(x) == 4) {
            Subgroup C4 = closure(D8, {x});
            auto f = membership_tests(D8, 2, C4);
            CHECK(f.centric);
            CHECK_FALSE(f.radical);
            CHECK_FALSE(f.principal_radical);
            break;
        }
    CHECK_THROWS(membership_tests(S4, 2, trivial_subgroup(S4)));
}

TEST_CASE("collect matches the definitional oracle on the battery") {
    struct Item {
        const char* spec;
        std::vector<int> primes;
    };
    const Item battery[] = {
        {"cyclic:4", {2}},
        {"cyclic:9", {3}},
        {"cyclic:6", {2, 3}},
        {"dihedral:8", {2}},
        {"quaternion:8", {2}},
        {"extraspecial:3", {3}},
        {"alt:4", {2, 3}},
        {"sym:3", {2, 3}},
        {"product(cyclic:2,sym:3)", {2, 3}},
        {"sym:4", {2, 3}},
        {"semidirect(product(elemab:2^2,cyclic:3),cyclic:2,(1 2)(3 4))", {2, 3}},
    };
    const Kind kinds[] = {Kind::S, Kind::B, Kind::Ce, Kind::BCe, Kind::D,
                          Kind::I, Kind::A, Kind::Z,  Kind::E};
    for (const auto& item : battery) {
        GroupTable G = build_group(item.spec);
        for (int p : item.primes)
            for (Kind k : kinds) {
                Collection C = collect(G, p, k);
                auto expect = oracle::collection_direct(G, p, k);
                INFO(item.spec << " p=" << p << " kind=" << kind_to_string(k));
                CHECK(same_members(C, expect));
            }
    }
}

TEST_CASE("inclusion chains among collections") {
    for (const char* spec : {"sym:4", "dihedral:8", "alt:4", "product(cyclic:2,sym:3)"}) {
        GroupTable G = build_group(spec);
        Collection S = collect(G, 2, Kind::S);
        Collection B = collect(G, 2, Kind::B);
        Collection Ce = collect(G, 2, Kind::Ce);
        Collection BCe = collect(G, 2, Kind::BCe);
        Collection D = collect(G, 2, Kind::D);
        Collection I = collect(G, 2, Kind::I);
        Collection A = collect(G, 2, Kind::A);
        Collection Z = collect(G, 2, Kind::Z);
        Collection E = collect(G, 2, Kind::E);
        auto subset = [](const Collection& X, const Collection& Y) {
            for (int i = 0; i < X.size(); ++i)
                if (Y.index_of(X.members[i].members) < 0) return false;
            return true;
        };
        CHECK(subset(D, BCe));
        CHECK(subset(BCe, B));
        CHECK(subset(BCe, Ce));
        CHECK(subset(Ce, S));
        CHECK(subset(B, S));
        CHECK(subset(I, S));
        CHECK(subset(E, A));
        CHECK(subset(Z, A));
        CHECK(subset(A, S));
        // BCe = B intersect Ce
        for (int i = 0; i < S.size(); ++i) {
            bool in_b = B.index_of(S.members[i].members) >= 0;
            bool in_ce = Ce.index_of(S.members[i].members) >= 0;
            bool in_bce = BCe.index_of(S.members[i].members) >= 0;
            CHECK(in_bce == (in_b && in_ce));
        }
        // every Sylow subgroup belongs to S, B, Ce, BCe, D, I
        for (const auto& Sy : all_sylows(G, 2))
            for (const Collection* C : {&S, &B, &Ce, &BCe, &D, &I})
                CHECK(C->index_of(Sy.members) >= 0);
    }
}

TEST_CASE("Z equals the fixed points and the image of the zeta endomorphism") {
    for (const char* spec : {"dihedral:8", "sym:4", "alt:4"}) {
        GroupTable G = build_group(spec);
        Collection A = collect(G, 2, Kind::A);
        Collection Z = collect(G, 2, Kind::Z);
        MonotoneEndomorphism F = endo_Z(A);
        MonotoneEndomorphism Finf = iterate_to_fixpoint(F);
        std::set<int> img(Finf.image_of.begin(), Finf.image_of.end());
        CHECK(int(img.size()) == Z.size());
        for (int i : img) CHECK(Z.index_of(A.members[i].members) >= 0);
        // fixed points of F are exactly Z
        for (int i = 0; i < A.size(); ++i) {
            bool fixed = F.image_of[i] == i;
            CHECK(fixed == (Z.index_of(A.members[i].members) >= 0));
        }
    }
}

TEST_CASE("I equals the image of the sylow-intersection endomorphism") {
    GroupTable G = build_group("sym:4");
    Collection S = collect(G, 2, Kind::S);
    Collection I = collect(G, 2, Kind::I);
    MonotoneEndomorphism F = endo_sylow_intersection(S);
    std::set<int> img(F.image_of.begin(), F.image_of.end());
    CHECK(int(img.size()) == I.size());
    for (int i : img) CHECK(I.index_of(S.members[i].members) >= 0);
    for (int i = 0; i < S.size(); ++i) CHECK((F.image_of[i] == i) == (I.index_of(S.members[i].members) >= 0));
    CHECK(I.size() == 4);
}

TEST_CASE("collections are conjugation closed") {
    GroupTable G = build_group("sym:4");
    for (Kind k : {Kind::S, Kind::B, Kind::Ce, Kind::A, Kind::Z, Kind::E, Kind::I}) {
        Collection C = collect(G, 2, k);
        for (int i = 0; i < C.size(); ++i)
            for (int g = 0; g < G.n; ++g)
                CHECK(C.index_of(conjugate_subgroup(G, C.members[i], g).members) >= 0);
    }
}
