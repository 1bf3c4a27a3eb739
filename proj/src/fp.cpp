#include "sclab/fp.hpp"

#include <stdexcept>

namespace sclab {

FpMat FpMat::identity(int p, int n) {
    FpMat m(p, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FpMat FpMat::transpose() const {
    FpMat t(p, cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

bool FpMat::is_zero() const {
    for (uint8_t x : a)
        if (x) return false;
    return true;
}

FpMat fp_mul(const FpMat& A, const FpMat& B) {
    if (A.cols != B.rows) throw std::runtime_error("fp_mul: shape mismatch");
    FpMat C(A.p, A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            int av = A.at(i, k);
            if (!av) continue;
            const uint8_t* brow = &B.a[size_t(k) * B.cols];
            uint8_t* crow = &C.a[size_t(i) * C.cols];
            for (int j = 0; j < B.cols; ++j) crow[j] = uint8_t((crow[j] + av * brow[j]) % A.p);
        }
    return C;
}

FpVec fp_apply(const FpMat& A, const FpVec& v) {
    if (int(v.size()) != A.cols) throw std::runtime_error("fp_apply: shape mismatch");
    FpVec out(A.rows, 0);
    for (int i = 0; i < A.rows; ++i) {
        int acc = 0;
        const uint8_t* row = &A.a[size_t(i) * A.cols];
        for (int j = 0; j < A.cols; ++j) acc += row[j] * v[j];
        out[i] = uint8_t(acc % A.p);
    }
    return out;
}

FpVec fp_add(int p, const FpVec& a, const FpVec& b) {
    FpVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = uint8_t((a[i] + b[i]) % p);
    return out;
}

FpVec fp_sub(int p, const FpVec& a, const FpVec& b) {
    FpVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = uint8_t((a[i] + p - b[i]) % p);
    return out;
}

FpVec fp_scale(int p, uint8_t c, const FpVec& a) {
    FpVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = uint8_t(c * a[i] % p);
    return out;
}

std::vector<int> fp_rref(FpMat& M) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < M.cols && r < M.rows; ++c) {
        int pr = -1;
        for (int i = r; i < M.rows; ++i)
            if (M.at(i, c)) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < M.cols; ++j) std::swap(M.at(pr, j), M.at(r, j));
        int inv = fp_inv_scalar(M.p, M.at(r, c));
        for (int j = 0; j < M.cols; ++j) M.at(r, j) = uint8_t(M.at(r, j) * inv % M.p);
        for (int i = 0; i < M.rows; ++i) {
            if (i == r) continue;
            int f = M.at(i, c);
            if (!f) continue;
            for (int j = 0; j < M.cols; ++j)
                M.at(i, j) = uint8_t((M.at(i, j) + (M.p - f) * M.at(r, j)) % M.p);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int fp_rank(FpMat M) { return int(fp_rref(M).size()); }

FpMat fp_kernel(const FpMat& M) {
    FpMat R = M;
    std::vector<int> piv = fp_rref(R);
    std::vector<int> pivot_of_col(M.cols, -1);
    for (size_t i = 0; i < piv.size(); ++i) pivot_of_col[piv[i]] = int(i);
    int nfree = M.cols - int(piv.size());
    FpMat K(M.p, nfree, M.cols);
    int kr = 0;
    for (int c = 0; c < M.cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        K.at(kr, c) = 1;
        for (size_t i = 0; i < piv.size(); ++i) {
            int v = R.at(int(i), c);
            if (v) K.at(kr, piv[i]) = uint8_t((M.p - v) % M.p);
        }
        ++kr;
    }
    return K;
}

FpVec FpSpace::reduce(FpVec v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        int c = pivots_[i];
        int f = v[c];
        if (!f) continue;
        for (int j = 0; j < dim_; ++j) v[j] = uint8_t((v[j] + (p_ - f) * rows_[i][j]) % p_);
    }
    return v;
}

bool FpSpace::contains(const FpVec& v) const {
    FpVec r = reduce(v);
    for (uint8_t x : r)
        if (x) return false;
    return true;
}

bool FpSpace::insert(FpVec v) {
    v = reduce(std::move(v));
    int piv = -1;
    for (int j = 0; j < dim_; ++j)
        if (v[j]) { piv = j; break; }
    if (piv < 0) return false;
    int inv = fp_inv_scalar(p_, v[piv]);
    for (int j = 0; j < dim_; ++j) v[j] = uint8_t(v[j] * inv % p_);
    // keep a reduced basis: eliminate the new pivot from existing rows
    for (size_t i = 0; i < rows_.size(); ++i) {
        int f = rows_[i][piv];
        if (!f) continue;
        for (int j = 0; j < dim_; ++j)
            rows_[i][j] = uint8_t((rows_[i][j] + (p_ - f) * v[j]) % p_);
    }
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, piv);
    return true;
}

FpSolver::FpSolver(FpMat A) {
    int p = A.p;
    R_ = std::move(A);
    T_ = FpMat::identity(p, R_.rows);
    int r = 0;
    for (int c = 0; c < R_.cols && r < R_.rows; ++c) {
        int pr = -1;
        for (int i = r; i < R_.rows; ++i)
            if (R_.at(i, c)) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r) {
            for (int j = 0; j < R_.cols; ++j) std::swap(R_.at(pr, j), R_.at(r, j));
            for (int j = 0; j < T_.cols; ++j) std::swap(T_.at(pr, j), T_.at(r, j));
        }
        int inv = fp_inv_scalar(p, R_.at(r, c));
        for (int j = 0; j < R_.cols; ++j) R_.at(r, j) = uint8_t(R_.at(r, j) * inv % p);
        for (int j = 0; j < T_.cols; ++j) T_.at(r, j) = uint8_t(T_.at(r, j) * inv % p);
        for (int i = 0; i < R_.rows; ++i) {
            if (i == r) continue;
            int f = R_.at(i, c);
            if (!f) continue;
            for (int j = 0; j < R_.cols; ++j)
                R_.at(i, j) = uint8_t((R_.at(i, j) + (p - f) * R_.at(r, j)) % p);
            for (int j = 0; j < T_.cols; ++j)
                T_.at(i, j) = uint8_t((T_.at(i, j) + (p - f) * T_.at(r, j)) % p);
        }
        pivots_.push_back(c);
        ++r;
    }
}

bool FpSolver::solve(const FpVec& b, FpVec& x) const {
    FpVec c = fp_apply(T_, b);
    for (int i = int(pivots_.size()); i < R_.rows; ++i)
        if (c[i]) return false;
    x.assign(R_.cols, 0);
    for (size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] = c[i];
    return true;
}

}  // namespace sclab
