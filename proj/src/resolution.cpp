#include "sclab/resolution.hpp"

#include <sstream>
#include <stdexcept>

namespace sclab {

namespace {

// left-regular action on R = A^k: g.(i, h) = (i, g h)
FpVec act(const GroupTable& T, int rank, const FpVec& v, int g) {
    int m = T.n;
    FpVec out(v.size(), 0);
    for (int i = 0; i < rank; ++i)
        for (int h = 0; h < m; ++h) out[size_t(i) * m + T.mul(g, h)] = v[size_t(i) * m + h];
    return out;
}

int aug_block(const GroupTable& T, const FpVec& v, int i, int p) {
    int m = T.n;
    int acc = 0;
    for (int h = 0; h < m; ++h) acc += v[size_t(i) * m + h];
    return acc % p;
}

// submodule generated by seeds, as a subspace closed under the group action
FpSpace spin(const GroupTable& T, int rank, int p, const std::vector<FpVec>& seeds) {
    FpSpace space(p, rank * T.n);
    std::vector<FpVec> work = seeds;
    while (!work.empty()) {
        FpVec v = std::move(work.back());
        work.pop_back();
        if (!space.insert(v)) continue;
        for (int g : T.gens) work.push_back(act(T, rank, v, g));
    }
    return space;
}

bool group_is_p_group(const GroupTable& T, int p) { return is_p_group_order(T.n, p); }

}  // namespace

ResolutionCache::ResolutionCache(const GroupTable& G, int p, int degree_cap)
    : G_(G), p_(p), cap_(degree_cap) {
    if (!is_prime(p)) throw std::runtime_error("resolution: p not prime");
}

const GroupResolution& ResolutionCache::resolution(const Subgroup& H) {
    auto it = res_.find(H.members);
    if (it != res_.end()) return *it->second;
    if (H.order != 1 && H.order % p_ != 0)
        throw std::runtime_error("resolution: p must divide |H| (or H trivial)");

    auto R = std::make_unique<GroupResolution>();
    R->L = subgroup_table(G_, H);
    R->p = p_;
    const GroupTable& T = R->L.table;
    int m = T.n;
    int maxdeg = cap_ + 1;

    R->ranks.assign(maxdeg + 1, 0);
    R->gens.resize(maxdeg + 1);
    R->aug.resize(maxdeg + 1);
    R->solver.resize(maxdeg + 1);

    R->ranks[0] = 1;
    // kernel of the augmentation
    FpMat augmat(p_, 1, m);
    for (int h = 0; h < m; ++h) augmat.at(0, h) = 1;
    FpMat K = fp_kernel(augmat);
    bool pgroup = group_is_p_group(T, p_);

    for (int n = 1; n <= maxdeg; ++n) {
        int prev_rank = R->ranks[n - 1];
        // choose generators of K
        std::vector<FpVec> kbasis;
        for (int r = 0; r < K.rows; ++r) {
            FpVec v(K.cols);
            for (int c = 0; c < K.cols; ++c) v[c] = K.at(r, c);
            kbasis.push_back(std::move(v));
        }
        std::vector<FpVec> chosen;
        if (pgroup) {
            // radical = augmentation ideal: minimal generators lift a basis
            // of K / JK
            std::vector<FpVec> jk_seeds;
            for (const auto& v : kbasis)
                for (int g : T.gens) {
                    FpVec w = act(T, prev_rank, v, g);
                    for (size_t c = 0; c < w.size(); ++c) w[c] = uint8_t((w[c] + p_ - v[c]) % p_);
                    jk_seeds.push_back(std::move(w));
                }
            FpSpace M = spin(T, prev_rank, p_, jk_seeds);
            for (const auto& v : kbasis)
                if (M.insert(v)) chosen.push_back(v);
        } else {
            FpSpace M(p_, prev_rank * m);
            for (const auto& v : kbasis) {
                if (M.contains(v)) continue;
                chosen.push_back(v);
                std::vector<FpVec> seeds = {v};
                FpSpace grown = spin(T, prev_rank, p_, seeds);
                for (const auto& b : grown.basis()) M.insert(b);
            }
        }
        // the chosen generators must span K as a module
        {
            FpSpace M = spin(T, prev_rank, p_, chosen);
            if (M.dim() != K.rows) throw std::runtime_error("resolution: generator selection failed");
        }
        R->ranks[n] = int(chosen.size());
        R->gens[n] = chosen;
        R->aug[n] = FpMat(p_, prev_rank, R->ranks[n]);
        for (int j = 0; j < R->ranks[n]; ++j)
            for (int i = 0; i < prev_rank; ++i)
                R->aug[n].at(i, j) = uint8_t(aug_block(T, chosen[j], i, p_));

        // full matrix of d_n for chain-map lifting and the next kernel
        FpMat D(p_, prev_rank * m, R->ranks[n] * m);
        for (int j = 0; j < R->ranks[n]; ++j)
            for (int h = 0; h < m; ++h) {
                FpVec col = act(T, prev_rank, chosen[j], h);
                int cidx = j * m + h;
                for (size_t r = 0; r < col.size(); ++r) D.at(int(r), cidx) = col[r];
            }
        R->solver[n] = std::make_unique<FpSolver>(D);
        if (n < maxdeg) K = fp_kernel(D);
    }

    // cohomology of Hom(R_*, F_p): delta^n = aug[n+1] applied to functionals
    R->cohom.resize(maxdeg);
    for (int n = 0; n < maxdeg; ++n) {
        auto& C = R->cohom[n];
        int kn = R->ranks[n];
        // delta^n: F_p^{kn} -> F_p^{k_{n+1}}, matrix aug[n+1]^T
        FpMat up = R->aug[n + 1].transpose();
        FpMat Zk = fp_kernel(up);  // cocycles (rows)
        // coboundaries: image of delta^{n-1} = rows of aug[n] (as functionals)
        FpSpace bspace(p_, kn);
        if (n > 0) {
            const FpMat& dn = R->aug[n];
            for (int i = 0; i < dn.rows; ++i) {
                FpVec row(kn);
                for (int j = 0; j < kn; ++j) row[j] = dn.at(i, j);
                bspace.insert(row);
            }
        }
        std::vector<FpVec> reps;
        FpSpace probe = bspace;
        for (int r = 0; r < Zk.rows; ++r) {
            FpVec v(kn);
            for (int c = 0; c < kn; ++c) v[c] = Zk.at(r, c);
            if (probe.insert(v)) reps.push_back(std::move(v));
        }
        C.dim = int(reps.size());
        C.basis = reps;
        int bdim = bspace.dim();
        C.coord_solve_cols = FpMat(p_, kn, bdim + C.dim);
        for (int b = 0; b < bdim; ++b)
            for (int r = 0; r < kn; ++r) C.coord_solve_cols.at(r, b) = bspace.basis()[b][r];
        for (int c = 0; c < C.dim; ++c)
            for (int r = 0; r < kn; ++r) C.coord_solve_cols.at(r, bdim + c) = reps[c][r];
        C.coordizer = std::make_unique<FpSolver>(C.coord_solve_cols);
    }

    auto* raw = R.get();
    res_[H.members] = std::move(R);
    return *raw;
}

int ResolutionCache::cohomology_dim(const Subgroup& H, int n) {
    if (n > cap_) throw std::runtime_error("cohomology degree cap exceeded");
    return resolution(H).cohom[n].dim;
}

FpMat ResolutionCache::cohomology_map(const GroupResolution& src, const GroupResolution& dst,
                                      const std::vector<int>& twist_ambient, int n) {
    const GroupTable& TS = src.L.table;
    const GroupTable& TD = dst.L.table;
    int ms = TS.n, md = TD.n;

    // local image of the twist: src local index -> dst local index
    std::vector<int> tw(ms);
    for (int x = 0; x < ms; ++x) {
        int amb = twist_ambient[src.L.to_ambient[x]];
        int loc = dst.L.to_local[amb];
        if (loc < 0) throw std::runtime_error("twist image leaves the target subgroup");
        tw[x] = loc;
    }

    // chain maps psi_k: R_k(src) -> R_k(dst), psi(x v) = tw(x) psi(v)
    std::vector<std::vector<FpVec>> psi(n + 1);  // per degree, per src generator
    psi[0] = {FpVec(size_t(dst.ranks[0]) * md, 0)};
    psi[0][0][0] = 1;  // gen -> gen (identity coset)
    for (int k = 1; k <= n; ++k) {
        psi[k].resize(src.ranks[k]);
        for (int j = 0; j < src.ranks[k]; ++j) {
            // rhs = psi_{k-1}(d^src gen_j), expanded through equivariance
            const FpVec& dgen = src.gens[k][j];
            FpVec rhs(size_t(dst.ranks[k - 1]) * md, 0);
            for (int i = 0; i < src.ranks[k - 1]; ++i)
                for (int h = 0; h < ms; ++h) {
                    int c = dgen[size_t(i) * ms + h];
                    if (!c) continue;
                    FpVec img = act(TD, dst.ranks[k - 1], psi[k - 1][i], tw[h]);
                    for (size_t t = 0; t < rhs.size(); ++t)
                        rhs[t] = uint8_t((rhs[t] + c * img[t]) % p_);
                }
            FpVec x;
            if (!dst.solver[k]->solve(rhs, x))
                throw std::runtime_error("chain-map lifting failed (resolution not exact?)");
            psi[k][j] = std::move(x);
        }
    }

    // induced map on gen-functionals, then on cohomology coordinates
    int ks = src.ranks[n], kd = dst.ranks[n];
    FpMat P(p_, ks, kd);
    for (int j = 0; j < ks; ++j)
        for (int i = 0; i < kd; ++i) P.at(j, i) = uint8_t(aug_block(TD, psi[n][j], i, p_));

    const auto& CD = dst.cohom[n];
    const auto& CS = src.cohom[n];
    FpMat out(p_, CS.dim, CD.dim);
    int bdim = CS.coord_solve_cols.cols - CS.dim;
    for (int b = 0; b < CD.dim; ++b) {
        FpVec w = fp_apply(P, CD.basis[b]);
        FpVec coords;
        if (!CS.coordizer->solve(w, coords))
            throw std::runtime_error("pullback of a cocycle is not a cocycle");
        for (int r = 0; r < CS.dim; ++r) out.at(r, b) = coords[bdim + r];
    }
    return out;
}

FpMat ResolutionCache::restriction_map(const Subgroup& K, const Subgroup& H, int n) {
    if (!K.members.is_subset_of(H.members)) throw std::runtime_error("restriction: K must lie in H");
    MapKey key{K.members, H.members, n};
    auto it = res_maps_.find(key);
    if (it != res_maps_.end()) return it->second;
    const GroupResolution& src = resolution(K);
    const GroupResolution& dst = resolution(H);
    std::vector<int> ident(G_.n);
    for (int x = 0; x < G_.n; ++x) ident[x] = x;
    FpMat M = cohomology_map(src, dst, ident, n);
    res_maps_[key] = M;
    return M;
}

FpMat ResolutionCache::conjugation_map(int g, const Subgroup& H, int n) {
    ConjKey key{H.members, g, n};
    auto it = conj_maps_.find(key);
    if (it != conj_maps_.end()) return it->second;
    Subgroup Hg = conjugate_subgroup(G_, H, g);
    const GroupResolution& src = resolution(Hg);
    const GroupResolution& dst = resolution(H);
    // pullback along y -> g^{-1} y g, an isomorphism gHg^{-1} -> H
    std::vector<int> tw(G_.n);
    int gi = G_.inv(g);
    for (int y = 0; y < G_.n; ++y) tw[y] = G_.mul(G_.mul(gi, y), g);
    FpMat M = cohomology_map(src, dst, tw, n);
    conj_maps_[key] = M;
    return M;
}

std::string ResolutionCache::dump_json(const Subgroup& H) {
    const GroupResolution& R = resolution(H);
    std::ostringstream os;
    os << "{\"order\":" << R.group_order() << ",\"p\":" << R.p << ",\"ranks\":[";
    for (size_t i = 0; i < R.ranks.size(); ++i) {
        if (i) os << ",";
        os << R.ranks[i];
    }
    os << "],\"differentials\":[";
    int m = R.group_order();
    for (size_t n = 1; n < R.gens.size(); ++n) {
        if (n > 1) os << ",";
        os << "[";
        for (size_t j = 0; j < R.gens[n].size(); ++j) {
            if (j) os << ",";
            os << "[";
            const FpVec& v = R.gens[n][j];
            for (size_t c = 0; c < v.size(); ++c) {
                if (c) os << ",";
                os << int(v[c]);
            }
            os << "]";
        }
        os << "]";
    }
    os << "],\"group_order\":" << m << "}";
    return os.str();
}

}  // namespace sclab
