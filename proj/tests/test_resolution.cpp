#include <map>

#include "doctest.h"
#include "sclab/group_spec.hpp"
#include "sclab/resolution.hpp"

using namespace sclab;

namespace {

// Bar-resolution oracle for H^1 and H^2 with trivial F_p coefficients:
// cochains are functions on tuples, differentials the standard alternating
// sums. Small groups only.
int bar_cohomology_dim(const GroupTable& G, int p, int n) {
    REQUIRE(n <= 2);
    int m = G.n;
    auto idx2 = [m](int a, int b) { return a * m + b; };
    // delta^0: C^0 -> C^1, (dc)(g) = c - c = 0
    // delta^1: C^1 -> C^2, (df)(a,b) = f(b) - f(ab) + f(a)
    FpMat d1(p, m * m, m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            int r = idx2(a, b);
            d1.at(r, b) = uint8_t((d1.at(r, b) + 1) % p);
            d1.at(r, G.mul(a, b)) = uint8_t((d1.at(r, G.mul(a, b)) + p - 1) % p);
            d1.at(r, a) = uint8_t((d1.at(r, a) + 1) % p);
        }
    if (n == 0) return 1;
    if (n == 1) return (d1.cols - fp_rank(d1)) - 0;
    // delta^2: C^2 -> C^3, (df)(a,b,c) = f(b,c) - f(ab,c) + f(a,bc) - f(a,b)
    FpMat d2(p, m * m * m, m * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c) {
                int r = (a * m + b) * m + c;
                auto bump = [&](int col, int v) { d2.at(r, col) = uint8_t((d2.at(r, col) + v) % p); };
                bump(idx2(b, c), 1);
                bump(idx2(G.mul(a, b), c), p - 1);
                bump(idx2(a, G.mul(b, c)), 1);
                bump(idx2(a, b), p - 1);
            }
    return (d2.cols - fp_rank(d2)) - fp_rank(d1);
}

}  // namespace

TEST_CASE("cohomology dimensions of the small 2-groups") {
    struct Item {
        const char* spec;
        std::vector<int> dims;  // n = 0..4
    };
    const Item items[] = {
        {"cyclic:2", {1, 1, 1, 1, 1}},
        {"cyclic:4", {1, 1, 1, 1, 1}},
        {"elemab:2^2", {1, 2, 3, 4, 5}},
        {"dihedral:8", {1, 2, 3, 4, 5}},
        {"quaternion:8", {1, 2, 2, 1, 1}},
    };
    for (const auto& it : items) {
        GroupTable G = build_group(it.spec);
        ResolutionCache R(G, 2, 5);
        for (int n = 0; n <= 4; ++n) {
            INFO(it.spec << " n=" << n);
            CHECK(R.cohomology_dim(full_subgroup(G), n) == it.dims[n]);
        }
    }
}

TEST_CASE("bar resolution agreement for n <= 2") {
    for (const char* spec : {"cyclic:2", "cyclic:4", "elemab:2^2", "dihedral:8", "quaternion:8"}) {
        GroupTable G = build_group(spec);
        ResolutionCache R(G, 2, 3);
        for (int n = 0; n <= 2; ++n) {
            INFO(spec << " n=" << n);
            CHECK(R.cohomology_dim(full_subgroup(G), n) == bar_cohomology_dim(G, 2, n));
        }
    }
    // odd primes
    for (const char* spec : {"cyclic:3", "cyclic:9", "sym:3", "extraspecial:3"}) {
        GroupTable G = build_group(spec);
        ResolutionCache R(G, 3, 3);
        for (int n = 0; n <= 2; ++n) {
            INFO(spec << " at p=3, n=" << n);
            CHECK(R.cohomology_dim(full_subgroup(G), n) == bar_cohomology_dim(G, 3, n));
        }
    }
}

TEST_CASE("non-p-groups through the augmented complex") {
    GroupTable S3 = build_group("sym:3");
    ResolutionCache R(S3, 2, 4);
    // H^*(S3;F_2) = H^*(Z/2;F_2): all ones
    for (int n = 0; n <= 3; ++n) CHECK(R.cohomology_dim(full_subgroup(S3), n) == 1);

    GroupTable S4 = build_group("sym:4");
    ResolutionCache R4(S4, 2, 4);
    CHECK(R4.cohomology_dim(full_subgroup(S4), 0) == 1);
    CHECK(R4.cohomology_dim(full_subgroup(S4), 1) == 1);
    CHECK(R4.cohomology_dim(full_subgroup(S4), 2) == 2);
    CHECK(R4.cohomology_dim(full_subgroup(S4), 3) == 3);
    for (int n = 0; n <= 2; ++n)
        CHECK(R4.cohomology_dim(full_subgroup(S4), n) == bar_cohomology_dim(S4, 2, n));

    // trivial group: dim 1 at n = 0 only
    ResolutionCache Rt(S3, 2, 4);
    CHECK(Rt.cohomology_dim(trivial_subgroup(S3), 0) == 1);
    for (int n = 1; n <= 3; ++n) CHECK(Rt.cohomology_dim(trivial_subgroup(S3), n) == 0);

    // p must divide the order
    GroupTable C3 = build_group("cyclic:3");
    ResolutionCache R2(C3, 2, 3);
    CHECK_THROWS(R2.cohomology_dim(full_subgroup(C3), 1));
}

TEST_CASE("restriction maps: identities, degree-1 vanishing, transitivity") {
    GroupTable G = build_group("cyclic:4");
    ResolutionCache R(G, 2, 4);
    Subgroup full = full_subgroup(G);
    Subgroup half = omega1(G, full, 2);

    // res to itself is the identity
    for (int n = 0; n <= 3; ++n) {
        FpMat m = R.restriction_map(full, full, n);
        CHECK(m == FpMat::identity(2, m.rows));
    }
    // degree-1 restriction Z/4 -> Z/2 kills the generator
    FpMat r1 = R.restriction_map(half, full, 1);
    CHECK(r1.is_zero());
    // degree 0: always iso
    CHECK(fp_rank(R.restriction_map(half, full, 0)) == 1);

    // transitivity on a chain inside D8
    GroupTable D8 = build_group("dihedral:8");
    ResolutionCache RD(D8, 2, 4);
    Subgroup whole = full_subgroup(D8);
    Subgroup Z = center_of(D8, whole);
    // a Klein subgroup containing the center
    Subgroup K = [&] {
        for (int x = 1; x < D8.n; ++x) {
            if (D8.element_order(x) != 2 || Z.members.test(x)) continue;
            Subgroup c = closure(D8, {x, Z.members.bits()[1]});
            if (c.order == 4) return c;
        }
        throw std::runtime_error("no Klein subgroup");
    }();
    for (int n = 0; n <= 3; ++n) {
        FpMat via = fp_mul(RD.restriction_map(Z, K, n), RD.restriction_map(K, whole, n));
        FpMat direct = RD.restriction_map(Z, whole, n);
        CHECK(via == direct);
    }
    CHECK_THROWS(RD.restriction_map(whole, Z, 1));
}

TEST_CASE("conjugation maps: inner triviality and composition") {
    GroupTable G = build_group("sym:4");
    ResolutionCache R(G, 2, 3);
    Subgroup D8 = sylow_p(G, 2);
    // inner elements act trivially
    for (int g : D8.elements())
        for (int n = 0; n <= 2; ++n) {
            FpMat m = R.conjugation_map(g, D8, n);
            CHECK(m == FpMat::identity(2, m.rows));
        }
    // composition c_{g2 g1} = c_{g2} after c_{g1}
    int g1 = G.gens[0], g2 = G.gens[1];
    Subgroup H = D8;
    for (int n = 0; n <= 2; ++n) {
        Subgroup H1 = conjugate_subgroup(G, H, g1);
        FpMat lhs = fp_mul(R.conjugation_map(g2, H1, n), R.conjugation_map(g1, H, n));
        FpMat rhs = R.conjugation_map(G.mul(g2, g1), H, n);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("resolution structure: minimality for p-groups, exactness everywhere") {
    GroupTable D8 = build_group("dihedral:8");
    ResolutionCache R(D8, 2, 4);
    const GroupResolution& res = R.resolution(full_subgroup(D8));
    // minimal resolution of a p-group: augmented differentials vanish and
    // ranks equal the cohomology dimensions
    for (size_t n = 1; n < res.aug.size(); ++n) CHECK(res.aug[n].is_zero());
    for (int n = 0; n <= 4; ++n) CHECK(res.ranks[n] == n + 1);

    // a non-p-group resolution still resolves: d^2 = 0 via the solvers
    GroupTable S4 = build_group("sym:4");
    ResolutionCache R4(S4, 2, 3);
    const GroupResolution& r4 = R4.resolution(full_subgroup(S4));
    for (size_t n = 2; n < r4.gens.size(); ++n) {
        for (const auto& g : r4.gens[n]) {
            // d_{n-1}(g) = 0: g lies in the kernel by construction; check by
            // expanding through the stored generator images
            FpVec img(size_t(r4.ranks[n - 2]) * r4.group_order(), 0);
            const GroupTable& T = r4.L.table;
            int m = T.n;
            for (int i = 0; i < r4.ranks[n - 1]; ++i)
                for (int h = 0; h < m; ++h) {
                    int c = g[size_t(i) * m + h];
                    if (!c) continue;
                    // h . gens[n-1][i]
                    for (int i2 = 0; i2 < r4.ranks[n - 2]; ++i2)
                        for (int h2 = 0; h2 < m; ++h2) {
                            int v = r4.gens[n - 1][i][size_t(i2) * m + h2];
                            if (!v) continue;
                            size_t pos = size_t(i2) * m + T.mul(h, h2);
                            img[pos] = uint8_t((img[pos] + c * v) % 2);
                        }
                }
            bool zero = true;
            for (auto x : img) zero = zero && x == 0;
            CHECK(zero);
        }
    }
}

TEST_CASE("resolution dump is valid json-ish text") {
    GroupTable G = build_group("cyclic:2");
    ResolutionCache R(G, 2, 2);
    std::string s = R.dump_json(full_subgroup(G));
    CHECK(s.find("\"ranks\"") != std::string::npos);
    CHECK(s.find("\"differentials\"") != std::string::npos);
}
