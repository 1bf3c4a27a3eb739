#include "doctest.h"
#include "sclab/fp.hpp"
#include "sclab/smith.hpp"

using namespace sclab;

TEST_CASE("rref, rank, kernel over F_2 and F_3") {
    FpMat M(2, 3, 4);
    int data[3][4] = {{1, 1, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 0}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 4; ++c) M.at(r, c) = uint8_t(data[r][c]);
    CHECK(fp_rank(M) == 2);
    FpMat K = fp_kernel(M);
    CHECK(K.rows == 2);
    for (int r = 0; r < K.rows; ++r) {
        FpVec v(K.cols);
        for (int c = 0; c < K.cols; ++c) v[c] = K.at(r, c);
        FpVec img = fp_apply(M, v);
        for (auto x : img) CHECK(x == 0);
    }

    FpMat A(3, 2, 2);
    A.at(0, 0) = 1;
    A.at(0, 1) = 2;
    A.at(1, 0) = 2;
    A.at(1, 1) = 2;
    CHECK(fp_rank(A) == 2);
}

TEST_CASE("solver reuses a fixed LHS") {
    FpMat A(2, 3, 3);
    int data[3][3] = {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) A.at(r, c) = uint8_t(data[r][c]);
    FpSolver s(A);
    CHECK(s.rank() == 2);
    FpVec b = {1, 1, 0}, x;
    CHECK(s.solve(b, x));
    FpVec img = fp_apply(A, x);
    CHECK(img == b);
    FpVec bad = {1, 0, 0};
    CHECK_FALSE(s.solve(bad, x));
}

TEST_CASE("FpSpace spin container") {
    FpSpace sp(2, 4);
    CHECK(sp.insert({1, 1, 0, 0}));
    CHECK(sp.insert({0, 1, 1, 0}));
    CHECK_FALSE(sp.insert({1, 0, 1, 0}));
    CHECK(sp.dim() == 2);
    CHECK(sp.contains({1, 0, 1, 0}));
    CHECK_FALSE(sp.contains({1, 0, 0, 1}));
}

TEST_CASE("smith invariant factors") {
    ZMat M(2, 2);
    M.at(0, 0) = 2;
    M.at(1, 1) = 6;
    auto f = smith_invariant_factors(M);
    REQUIRE(f.size() == 2);
    CHECK(f[0] == 2);
    CHECK(f[1] == 6);

    ZMat N(2, 2);
    N.at(0, 0) = 2;
    N.at(1, 1) = 3;
    f = smith_invariant_factors(N);
    REQUIRE(f.size() == 2);
    CHECK(f[0] == 1);
    CHECK(f[1] == 6);
}
