#pragma once

#include <cstdint>
#include <vector>

namespace sclab {

// Integer matrix in row-major order for Smith normal form computations.
struct ZMat {
    int rows = 0, cols = 0;
    std::vector<int64_t> a;

    ZMat() = default;
    ZMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, 0) {}
    int64_t& at(int r, int c) { return a[size_t(r) * cols + c]; }
    int64_t at(int r, int c) const { return a[size_t(r) * cols + c]; }
};

// Invariant factors d_1 | d_2 | ... (positive, including 1s), one per
// nonzero diagonal entry of the Smith normal form.
std::vector<int64_t> smith_invariant_factors(ZMat M);

}  // namespace sclab
