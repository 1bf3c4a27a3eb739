#include "sclab/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace sclab {

namespace {

void check_entry(int64_t v) {
    // Boundary matrices stay tiny in practice; guard against silent overflow.
    if (v > (int64_t(1) << 62) || v < -(int64_t(1) << 62))
        throw std::runtime_error("smith: entry overflow");
}

}  // namespace

std::vector<int64_t> smith_invariant_factors(ZMat M) {
    int t = 0;
    std::vector<int64_t> diag;
    while (t < M.rows && t < M.cols) {
        // pick the nonzero entry with smallest absolute value
        int pr = -1, pc = -1;
        int64_t best = 0;
        for (int i = t; i < M.rows; ++i)
            for (int j = t; j < M.cols; ++j) {
                int64_t v = std::llabs(M.at(i, j));
                if (v && (pr < 0 || v < best)) { best = v; pr = i; pc = j; }
            }
        if (pr < 0) break;
        for (int j = 0; j < M.cols; ++j) std::swap(M.at(pr, j), M.at(t, j));
        for (int i = 0; i < M.rows; ++i) std::swap(M.at(i, pc), M.at(i, t));

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < M.rows; ++i) {
                int64_t q = M.at(i, t) / M.at(t, t);
                if (q)
                    for (int j = t; j < M.cols; ++j) {
                        M.at(i, j) -= q * M.at(t, j);
                        check_entry(M.at(i, j));
                    }
                if (M.at(i, t)) {
                    for (int j = 0; j < M.cols; ++j) std::swap(M.at(i, j), M.at(t, j));
                    clean = false;
                }
            }
            for (int j = t + 1; j < M.cols; ++j) {
                int64_t q = M.at(t, j) / M.at(t, t);
                if (q)
                    for (int i = t; i < M.rows; ++i) {
                        M.at(i, j) -= q * M.at(i, t);
                        check_entry(M.at(i, j));
                    }
                if (M.at(t, j)) {
                    for (int i = 0; i < M.rows; ++i) std::swap(M.at(i, j), M.at(i, t));
                    clean = false;
                }
            }
            if (!clean) continue;
            // divisibility fix-up: pivot must divide the remaining block
            for (int i = t + 1; i < M.rows && clean; ++i)
                for (int j = t + 1; j < M.cols && clean; ++j)
                    if (M.at(i, j) % M.at(t, t)) {
                        for (int k = t; k < M.cols; ++k) {
                            M.at(t, k) += M.at(i, k);
                            check_entry(M.at(t, k));
                        }
                        clean = false;
                    }
        }
        diag.push_back(std::llabs(M.at(t, t)));
        ++t;
    }
    std::sort(diag.begin(), diag.end());
    return diag;
}

}  // namespace sclab
