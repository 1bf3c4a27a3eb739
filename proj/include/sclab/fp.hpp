#pragma once

#include <cstdint>
#include <vector>

namespace sclab {

using FpVec = std::vector<uint8_t>;

// Dense matrix over F_p, p a small prime. Row-reduction uses deterministic
// pivoting (lowest row/column index first) so cached bases are stable
// across runs.
struct FpMat {
    int p = 2;
    int rows = 0, cols = 0;
    std::vector<uint8_t> a;

    FpMat() = default;
    FpMat(int p_, int r, int c) : p(p_), rows(r), cols(c), a(size_t(r) * c, 0) {}

    uint8_t& at(int r, int c) { return a[size_t(r) * cols + c]; }
    uint8_t at(int r, int c) const { return a[size_t(r) * cols + c]; }

    static FpMat identity(int p, int n);
    static FpMat zero(int p, int r, int c) { return FpMat(p, r, c); }

    FpMat transpose() const;
    bool operator==(const FpMat& o) const { return p == o.p && rows == o.rows && cols == o.cols && a == o.a; }
    bool is_zero() const;
};

FpMat fp_mul(const FpMat& A, const FpMat& B);
FpVec fp_apply(const FpMat& A, const FpVec& v);
FpVec fp_add(int p, const FpVec& a, const FpVec& b);
FpVec fp_scale(int p, uint8_t c, const FpVec& a);
FpVec fp_sub(int p, const FpVec& a, const FpVec& b);

// In-place reduced row echelon form; returns pivot column per pivot row.
std::vector<int> fp_rref(FpMat& M);
int fp_rank(FpMat M);
// Basis of the right kernel (as rows of the returned matrix).
FpMat fp_kernel(const FpMat& M);

// Row space in rref form with incremental insertion; used as a subspace
// container for spinning submodules.
class FpSpace {
public:
    FpSpace() = default;
    FpSpace(int p, int dim) : p_(p), dim_(dim) {}

    int dim_ambient() const { return dim_; }
    int dim() const { return int(rows_.size()); }
    int p() const { return p_; }

    // Reduces v against the basis; returns the residue.
    FpVec reduce(FpVec v) const;
    bool contains(const FpVec& v) const;
    // Inserts v if independent; returns true if the dimension grew.
    bool insert(FpVec v);
    const std::vector<FpVec>& basis() const { return rows_; }

private:
    int p_ = 2, dim_ = 0;
    std::vector<FpVec> rows_;   // rref rows, sorted by pivot
    std::vector<int> pivots_;
};

// Solver for A x = b with a fixed A, reused across many right-hand sides.
class FpSolver {
public:
    FpSolver() = default;
    explicit FpSolver(FpMat A);
    // Returns true and writes a solution (free variables zero) on success.
    bool solve(const FpVec& b, FpVec& x) const;
    int rank() const { return int(pivots_.size()); }

private:
    FpMat R_;                 // rref of A
    FpMat T_;                 // row transform: T * A = R
    std::vector<int> pivots_; // pivot column of each pivot row
};

inline int fp_inv_scalar(int p, int a) {
    // p prime, a != 0 mod p
    int r = 1, e = p - 2, base = ((a % p) + p) % p;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

}  // namespace sclab
