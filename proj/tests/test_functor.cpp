#include "doctest.h"
#include "sclab/functor.hpp"
#include "sclab/group_spec.hpp"

using namespace sclab;

TEST_CASE("fixed points of the trivial module: the constant functor") {
    GroupTable G = build_group("sym:3");
    Collection C = collect(G, 2, Kind::S);
    auto O = build_orbit_category(C);
    GModule M;
    M.p = 2;
    M.dim = 1;
    for (size_t i = 0; i < G.gens.size(); ++i) M.gen_mats.push_back(FpMat::identity(2, 1));
    auto F = fixed_points_functor(O, M);
    for (int x = 0; x < O.cat.nobj; ++x) CHECK(F.dims[x] == 1);
    // connected category: lim0 = 1
    auto l0 = lim0(F);
    CHECK(l0.dim == 1);
}

TEST_CASE("beta over the orbit category of A(Z/4): lim0 = 1 but restriction has rank 0") {
    GroupTable G = build_group("cyclic:4");
    ResolutionCache R(G, 2, 4);
    Collection A = collect(G, 2, Kind::A);
    REQUIRE(A.size() == 1);
    auto O = build_orbit_category(A);
    auto F = beta_functor(O, R, 1);
    auto l0 = lim0(F);
    CHECK(l0.dim == 1);
    ComparisonData cmp;
    cmp.value_groups.push_back(A.members[0]);
    auto slice = sharpness_slice(F, R, 1, cmp, 2);
    CHECK(slice.comparison_rank == 0);
    CHECK(slice.target_dim == 1);
}

TEST_CASE("beta over the orbit category of S_3(S3): invariants under the order-2 twist") {
    GroupTable G = build_group("sym:3");
    ResolutionCache R(G, 3, 4);
    Collection S = collect(G, 3, Kind::S);
    REQUIRE(S.size() == 1);
    auto O = build_orbit_category(S);
    auto F = beta_functor(O, R, 1);
    auto l0 = lim0(F);
    CHECK(l0.dim == 0);  // = dim H^1(S3;F_3)
    CHECK(R.cohomology_dim(full_subgroup(G), 1) == 0);
}

TEST_CASE("alpha(0) over the conjugacy category of Ce(D8) is constant") {
    GroupTable G = build_group("dihedral:8");
    ResolutionCache R(G, 2, 4);
    Collection Ce = collect(G, 2, Kind::Ce);
    auto A = build_conjugation_category(Ce);
    auto F = alpha_functor(A, R, 0);
    for (int x = 0; x < A.cat.nobj; ++x) CHECK(F.dims[x] == 1);
    for (int f = 0; f < A.cat.nmor(); ++f) CHECK(F.mats[f] == FpMat::identity(2, 1));
}

TEST_CASE("higher limits over a category with terminal object are concentrated in degree 0") {
    GroupTable G = build_group("dihedral:8");
    ResolutionCache R(G, 2, 4);
    Collection S = collect(G, 2, Kind::S);
    auto O = build_orbit_category(S);
    for (int n = 0; n <= 2; ++n) {
        auto F = beta_functor(O, R, n);
        auto dims = higher_limits(F, 3);
        CHECK(dims[0] == R.cohomology_dim(full_subgroup(G), n));
        for (int i = 1; i <= 3; ++i) CHECK(dims[i] == 0);
    }
}

TEST_CASE("lim0 equals Ext^0 across functors") {
    GroupTable G = build_group("sym:4");
    ResolutionCache R(G, 2, 3);
    Collection B = collect(G, 2, Kind::B);
    auto O = build_orbit_category(B);
    auto A = build_conjugation_category(B);
    auto S = build_orbit_simplex_category(B);
    for (int n = 0; n <= 2; ++n) {
        for (auto F : {beta_functor(O, R, n), alpha_functor(A, R, n), delta_functor(S, R, n)}) {
            auto l0 = lim0(F);
            auto dims = higher_limits(F, 1);
            CHECK(l0.dim == dims[0]);
        }
    }
}

TEST_CASE("bredon cochain complex examples") {
    // a single fixed vertex: H^0 = value, higher zero
    GroupTable A4 = build_group("alt:4");
    ResolutionCache R(A4, 2, 3);
    Collection I = collect(A4, 2, Kind::I);
    REQUIRE(I.size() == 1);
    auto X = build_g_chain_complex(I);
    // the single vertex is fixed with stabilizer all of A4
    for (int n = 0; n <= 2; ++n) {
        auto dims = bredon_cohomology(X, R, n, 2);
        CHECK(dims[0] == R.cohomology_dim(full_subgroup(A4), n));
        CHECK(dims[1] == 0);
        CHECK(dims[2] == 0);
    }

    // S(S3) at p=2 with degree-0 coefficients: one orbit of vertices with
    // stabilizer of order 2
    GroupTable S3 = build_group("sym:3");
    ResolutionCache RS(S3, 2, 3);
    Collection S = collect(S3, 2, Kind::S);
    auto XS = build_g_chain_complex(S);
    auto dims = bredon_cohomology(XS, RS, 0, 2);
    CHECK(dims[0] == 1);
    CHECK(dims[1] == 0);
    CHECK(dims[2] == 0);
}

TEST_CASE("normalizer higher limits equal bredon cohomology") {
    struct Item {
        const char* spec;
        int p;
        Kind kind;
    };
    const Item items[] = {
        {"dihedral:8", 2, Kind::S}, {"dihedral:8", 2, Kind::Ce}, {"sym:4", 2, Kind::E},
        {"sym:4", 2, Kind::B},      {"sym:3", 3, Kind::S},       {"alt:4", 2, Kind::A},
    };
    for (const auto& it : items) {
        GroupTable G = build_group(it.spec);
        ResolutionCache R(G, it.p, 4);
        Collection C = collect(G, it.p, it.kind);
        auto S = build_orbit_simplex_category(C);
        auto X = build_g_chain_complex(C);
        for (int n = 0; n <= 2; ++n) {
            auto F = delta_functor(S, R, n);
            auto lims = higher_limits(F, 3);
            auto bred = bredon_cohomology(X, R, n, 3);
            INFO(it.spec << " p=" << it.p << " kind=" << kind_to_string(it.kind) << " n=" << n);
            CHECK(lims == bred);
        }
    }
}

TEST_CASE("representative reshuffling never changes bredon dimensions") {
    GroupTable G = build_group("sym:4");
    ResolutionCache R(G, 2, 3);
    Collection C = collect(G, 2, Kind::B);
    auto dims0 = bredon_cohomology(build_g_chain_complex(C), R, 1, 3);
    for (long long seed = 1; seed <= 10; ++seed) {
        auto X = build_g_chain_complex(C, seed);
        CHECK(bredon_cohomology(X, R, 1, 3) == dims0);
    }
}

TEST_CASE("stable elements: lim0 of beta over O_S recovers H^n(G)") {
    struct Item {
        const char* spec;
        int p;
    };
    const Item items[] = {{"sym:4", 2}, {"alt:4", 2}, {"sym:3", 3}, {"sym:3", 2},
                          {"dihedral:8", 2}, {"product(cyclic:2,sym:3)", 2}};
    for (const auto& it : items) {
        GroupTable G = build_group(it.spec);
        ResolutionCache R(G, it.p, 4);
        Collection S = collect(G, it.p, Kind::S);
        auto O = build_orbit_category(S);
        for (int n = 0; n <= 3; ++n) {
            auto F = beta_functor(O, R, n);
            auto l0 = lim0(F);
            INFO(it.spec << " p=" << it.p << " n=" << n);
            CHECK(l0.dim == R.cohomology_dim(full_subgroup(G), n));
        }
    }
}
