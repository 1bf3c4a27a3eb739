#include "sclab/functor.hpp"

#include <algorithm>
#include <stdexcept>

namespace sclab {

void CoefficientFunctor::validate() const {
    const FiniteCat& D = *cat;
    int nm = D.nmor();
    for (int x = 0; x < D.nobj; ++x) {
        const FpMat& m = mats[D.id_of[x]];
        if (m.rows != dims[x] || m.cols != dims[x] || !(m == FpMat::identity(p, dims[x])))
            throw std::runtime_error("functor: identity does not map to the identity matrix");
    }
    for (int f = 0; f < nm; ++f) {
        int sx = D.mors[f].src, sy = D.mors[f].dst;
        const FpMat& mf = mats[f];
        bool shape_ok = variance == Variance::Covariant
                            ? (mf.cols == dims[sx] && mf.rows == dims[sy])
                            : (mf.cols == dims[sy] && mf.rows == dims[sx]);
        if (!shape_ok) throw std::runtime_error("functor: matrix shape mismatch");
        for (int g = 0; g < nm; ++g) {
            int gf = D.compose(g, f);
            if (gf < 0) continue;
            FpMat lhs = variance == Variance::Covariant ? fp_mul(mats[g], mats[f])
                                                        : fp_mul(mats[f], mats[g]);
            if (!(lhs == mats[gf])) throw std::runtime_error("functor: composition law fails");
        }
    }
}

CoefficientFunctor beta_functor(const OrbitCategory& O, ResolutionCache& R, int n) {
    const Collection& C = *O.C;
    const GroupTable& G = *C.G;
    CoefficientFunctor F;
    F.cat = &O.cat;
    F.p = R.prime();
    F.variance = Variance::Contravariant;
    F.dims.resize(C.size());
    for (int i = 0; i < C.size(); ++i) F.dims[i] = R.cohomology_dim(C.members[i], n);
    F.mats.resize(O.cat.nmor());
    for (int f = 0; f < O.cat.nmor(); ++f) {
        int Hi = O.cat.mors[f].src, Ki = O.cat.mors[f].dst;
        int a = O.coset_rep[f];
        Subgroup Ha = conjugate_subgroup(G, C.members[Hi], G.inv(a));  // a^{-1} H a
        FpMat res = R.restriction_map(Ha, C.members[Ki], n);
        FpMat cj = R.conjugation_map(a, Ha, n);  // H^n(Ha) -> H^n(H)
        F.mats[f] = fp_mul(cj, res);
    }
    F.validate();
    return F;
}

CoefficientFunctor alpha_functor(const ConjugacyCategory& A, ResolutionCache& R, int n) {
    const Collection& C = *A.C;
    const GroupTable& G = *C.G;
    CoefficientFunctor F;
    F.cat = &A.cat;
    F.p = R.prime();
    F.variance = Variance::Covariant;
    F.dims.resize(C.size());
    for (int i = 0; i < C.size(); ++i) F.dims[i] = R.cohomology_dim(C.centralizers[i], n);
    F.mats.resize(A.cat.nmor());
    for (int f = 0; f < A.cat.nmor(); ++f) {
        int Hi = A.cat.mors[f].src, Ki = A.cat.mors[f].dst;
        int g = A.witness[f];
        Subgroup CH = C.centralizers[Hi];
        Subgroup CHg = conjugate_subgroup(G, CH, g);  // C_G(gHg^{-1})
        FpMat cj = R.conjugation_map(g, CH, n);       // H^n(C(H)) -> H^n(gC(H)g^{-1})
        FpMat res = R.restriction_map(C.centralizers[Ki], CHg, n);
        F.mats[f] = fp_mul(res, cj);
    }
    F.validate();
    return F;
}

CoefficientFunctor delta_functor(const OrbitSimplexCategory& S, ResolutionCache& R, int n) {
    const Collection& C = *S.C;
    const GroupTable& G = *C.G;
    CoefficientFunctor F;
    F.cat = &S.cat;
    F.p = R.prime();
    F.variance = Variance::Contravariant;
    int nobj = S.cat.nobj;
    F.dims.resize(nobj);
    for (int i = 0; i < nobj; ++i) F.dims[i] = R.cohomology_dim(S.stabilizer[i], n);
    F.mats.resize(S.cat.nmor());
    for (int f = 0; f < S.cat.nmor(); ++f) {
        int ti = S.cat.mors[f].src, si = S.cat.mors[f].dst;
        int g = S.conjugator[f];
        Subgroup Gs = S.stabilizer[si];
        Subgroup Gx = conjugate_subgroup(G, Gs, g);
        FpMat cj = R.conjugation_map(g, Gs, n);
        FpMat res = R.restriction_map(S.stabilizer[ti], Gx, n);
        F.mats[f] = fp_mul(res, cj);
    }
    F.validate();
    return F;
}

namespace {

// basis of the H-fixed subspace of M (rows)
FpMat fixed_space(const GModule& M, const GroupTable& G, const Subgroup& H,
                  const std::vector<FpMat>& rho) {
    auto gens = small_generating_set(G, H);
    FpMat stacked(M.p, int(gens.size()) * M.dim, M.dim);
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        const FpMat& m = rho[gens[gi]];
        for (int r = 0; r < M.dim; ++r)
            for (int c = 0; c < M.dim; ++c) {
                int v = m.at(r, c) + (r == c ? M.p - 1 : 0);
                stacked.at(int(gi) * M.dim + r, c) = uint8_t(v % M.p);
            }
    }
    if (gens.empty()) return FpMat::identity(M.p, M.dim);
    return fp_kernel(stacked);
}

}  // namespace

CoefficientFunctor fixed_points_functor(const OrbitCategory& O, const GModule& M) {
    const Collection& C = *O.C;
    const GroupTable& G = *C.G;
    // representation matrices for every element by generator factorization
    std::vector<FpMat> rho(G.n);
    std::vector<char> known(G.n, 0);
    rho[0] = FpMat::identity(M.p, M.dim);
    known[0] = 1;
    std::vector<int> frontier = {0};
    size_t head = 0;
    while (head < frontier.size()) {
        int x = frontier[head++];
        for (size_t gi = 0; gi < G.gens.size(); ++gi) {
            int y = G.mul(G.gens[gi], x);
            if (known[y]) continue;
            rho[y] = fp_mul(M.gen_mats[gi], rho[x]);
            known[y] = 1;
            frontier.push_back(y);
        }
    }
    for (int x = 0; x < G.n; ++x)
        if (!known[x]) throw std::runtime_error("fixed_points: generators do not generate G");

    CoefficientFunctor F;
    F.cat = &O.cat;
    F.p = M.p;
    F.variance = Variance::Contravariant;
    int nobj = O.cat.nobj;
    std::vector<FpMat> bases(nobj);
    std::vector<std::unique_ptr<FpSolver>> coord(nobj);
    F.dims.resize(nobj);
    for (int i = 0; i < nobj; ++i) {
        bases[i] = fixed_space(M, G, C.members[i], rho);
        F.dims[i] = bases[i].rows;
        coord[i] = std::make_unique<FpSolver>(bases[i].transpose());
    }
    F.mats.resize(O.cat.nmor());
    for (int f = 0; f < O.cat.nmor(); ++f) {
        int Hi = O.cat.mors[f].src, Ki = O.cat.mors[f].dst;
        int a = O.coset_rep[f];
        // M^K -> M^H, m -> a.m
        FpMat out(M.p, F.dims[Hi], F.dims[Ki]);
        for (int b = 0; b < F.dims[Ki]; ++b) {
            FpVec v(M.dim);
            for (int c = 0; c < M.dim; ++c) v[c] = bases[Ki].at(b, c);
            FpVec w = fp_apply(rho[a], v);
            FpVec x;
            if (!coord[Hi]->solve(w, x))
                throw std::runtime_error("fixed_points: image leaves the fixed subspace");
            for (int r = 0; r < F.dims[Hi]; ++r) out.at(r, b) = x[r];
        }
        F.mats[f] = out;
    }
    F.validate();
    return F;
}

Lim0Result lim0(const CoefficientFunctor& F) {
    const FiniteCat& D = *F.cat;
    Lim0Result out;
    out.offsets.assign(D.nobj + 1, 0);
    for (int x = 0; x < D.nobj; ++x) out.offsets[x + 1] = out.offsets[x] + F.dims[x];
    int total = out.offsets[D.nobj];
    int rows = 0;
    for (int f = 0; f < D.nmor(); ++f)
        rows += F.variance == Variance::Covariant ? F.dims[D.mors[f].dst] : F.dims[D.mors[f].src];
    FpMat M(F.p, rows, total);
    int r0 = 0;
    for (int f = 0; f < D.nmor(); ++f) {
        int sx = D.mors[f].src, sy = D.mors[f].dst;
        const FpMat& mf = F.mats[f];
        if (F.variance == Variance::Covariant) {
            // v_y - M_f v_x = 0
            for (int r = 0; r < F.dims[sy]; ++r) {
                M.at(r0 + r, out.offsets[sy] + r) = uint8_t((M.at(r0 + r, out.offsets[sy] + r) + 1) % F.p);
                for (int c = 0; c < F.dims[sx]; ++c)
                    M.at(r0 + r, out.offsets[sx] + c) =
                        uint8_t((M.at(r0 + r, out.offsets[sx] + c) + F.p - mf.at(r, c)) % F.p);
            }
            r0 += F.dims[sy];
        } else {
            // v_x - M_f v_y = 0
            for (int r = 0; r < F.dims[sx]; ++r) {
                M.at(r0 + r, out.offsets[sx] + r) = uint8_t((M.at(r0 + r, out.offsets[sx] + r) + 1) % F.p);
                for (int c = 0; c < F.dims[sy]; ++c)
                    M.at(r0 + r, out.offsets[sy] + c) =
                        uint8_t((M.at(r0 + r, out.offsets[sy] + c) + F.p - mf.at(r, c)) % F.p);
            }
            r0 += F.dims[sx];
        }
    }
    out.basis = fp_kernel(M);
    out.dim = out.basis.rows;
    return out;
}

namespace {

// projective resolution of the constant module over the category algebra
// by sums of representables P_x = k Hom(x, -)
struct CatResolution {
    const FiniteCat* D = nullptr;
    int p = 2;
    struct Level {
        std::vector<int> gen_obj;
        // per object: ordered basis (generator j, morphism f: x_j -> y)
        std::vector<std::vector<std::pair<int, int>>> basis;
        std::vector<int> offset_of_gen;  // not used externally
        // d[j]: image of generator j inside the previous level at object
        // gen_obj[j], in that object's basis coordinates
        std::vector<FpVec> d;
    };
    std::vector<Level> levels;
};

void fill_basis(const FiniteCat& D, CatResolution::Level& L) {
    L.basis.assign(D.nobj, {});
    for (size_t j = 0; j < L.gen_obj.size(); ++j) {
        int x = L.gen_obj[j];
        for (int y = 0; y < D.nobj; ++y)
            for (int f : D.hom[x][y]) L.basis[y].push_back({int(j), f});
    }
}

// action of morphism f: y -> z on a vector at object y of level L
FpVec level_act(const FiniteCat& D, const CatResolution::Level& L, int f, const FpVec& v, int p) {
    int y = D.mors[f].src, z = D.mors[f].dst;
    FpVec out(L.basis[z].size(), 0);
    // index lookup by (j, morphism)
    for (size_t b = 0; b < L.basis[y].size(); ++b) {
        if (!v[b]) continue;
        auto [j, g] = L.basis[y][b];
        int fg = D.compose(f, g);
        // locate (j, fg) in basis[z]
        int pos = -1;
        for (size_t t = 0; t < L.basis[z].size(); ++t)
            if (L.basis[z][t].first == j && L.basis[z][t].second == fg) { pos = int(t); break; }
        if (pos < 0) throw std::runtime_error("category resolution: basis lookup failed");
        out[pos] = uint8_t((out[pos] + v[b]) % p);
    }
    return out;
}

// spin the submodule generated by (obj, vec) pairs
std::vector<FpSpace> spin_module(const FiniteCat& D, const CatResolution::Level& L, int p,
                                 std::vector<std::pair<int, FpVec>> work,
                                 std::vector<FpSpace> spaces) {
    while (!work.empty()) {
        auto [y, v] = std::move(work.back());
        work.pop_back();
        if (!spaces[y].insert(v)) continue;
        for (int z = 0; z < D.nobj; ++z)
            for (int f : D.hom[y][z]) work.push_back({z, level_act(D, L, f, v, p)});
    }
    return spaces;
}

CatResolution build_cat_resolution(const FiniteCat& D, int p, int depth) {
    CatResolution R;
    R.D = &D;
    R.p = p;
    R.levels.reserve(depth + 1);

    // level 0: cover the constant module
    CatResolution::Level L0;
    std::vector<char> covered(D.nobj, 0);
    for (int x = 0; x < D.nobj; ++x) {
        if (covered[x]) continue;
        L0.gen_obj.push_back(x);
        for (int y = 0; y < D.nobj; ++y)
            if (!D.hom[x][y].empty()) covered[y] = 1;
    }
    fill_basis(D, L0);
    R.levels.push_back(std::move(L0));

    // kernel of R_0 -> constant: sum-zero vectors per object
    std::vector<FpMat> K(D.nobj);
    for (int y = 0; y < D.nobj; ++y) {
        int dim = int(R.levels[0].basis[y].size());
        FpMat row(p, 1, dim);
        for (int c = 0; c < dim; ++c) row.at(0, c) = 1;
        K[y] = fp_kernel(row);
    }

    for (int n = 1; n <= depth; ++n) {
        const CatResolution::Level& prev = R.levels[n - 1];
        CatResolution::Level L;
        std::vector<FpSpace> M(D.nobj);
        for (int y = 0; y < D.nobj; ++y) M[y] = FpSpace(p, int(prev.basis[y].size()));
        std::vector<std::pair<int, FpVec>> gens_raw;
        for (int y = 0; y < D.nobj; ++y) {
            for (int r = 0; r < K[y].rows; ++r) {
                FpVec v(K[y].cols);
                for (int c = 0; c < K[y].cols; ++c) v[c] = K[y].at(r, c);
                if (M[y].contains(v)) continue;
                L.gen_obj.push_back(y);
                L.d.push_back(v);
                M = spin_module(D, prev, p, {{y, v}}, std::move(M));
            }
        }
        // sanity: the generators span the kernel
        for (int y = 0; y < D.nobj; ++y)
            if (M[y].dim() != K[y].rows)
                throw std::runtime_error("category resolution: kernel generators incomplete");
        fill_basis(D, L);
        R.levels.push_back(L);
        if (n == depth) break;

        // kernel of d_n as per-object matrices
        std::vector<FpMat> K2(D.nobj);
        for (int y = 0; y < D.nobj; ++y) {
            int cols = int(L.basis[y].size());
            int rows = int(prev.basis[y].size());
            FpMat Dm(p, rows, cols);
            for (int c = 0; c < cols; ++c) {
                auto [j, f] = L.basis[y][c];
                // image of basis (j, f) = f . d[j]
                FpVec img = level_act(D, prev, f, L.d[j], p);
                for (int r = 0; r < rows; ++r) Dm.at(r, c) = img[r];
            }
            K2[y] = fp_kernel(Dm);
        }
        K = std::move(K2);
    }
    return R;
}

}  // namespace

std::vector<int> higher_limits(const CoefficientFunctor& F, int i_max) {
    FiniteCat op_storage;
    const FiniteCat* D = F.cat;
    if (F.variance == Variance::Contravariant) {
        op_storage = F.cat->opposite();
        D = &op_storage;
    }
    // morphism indices agree between the category and its opposite
    CatResolution R = build_cat_resolution(*D, F.p, i_max + 1);

    // Hom(R_n, M) has one block of dim dims[x_j] per generator
    auto hom_dim = [&](int n) {
        int total = 0;
        for (int x : R.levels[n].gen_obj) total += F.dims[x];
        return total;
    };
    std::vector<FpMat> delta(i_max + 1);
    for (int n = 0; n <= i_max; ++n) {
        const auto& cur = R.levels[n];
        const auto& nxt = R.levels[n + 1];
        std::vector<int> cur_off(cur.gen_obj.size() + 1, 0);
        for (size_t j = 0; j < cur.gen_obj.size(); ++j)
            cur_off[j + 1] = cur_off[j] + F.dims[cur.gen_obj[j]];
        std::vector<int> nxt_off(nxt.gen_obj.size() + 1, 0);
        for (size_t k = 0; k < nxt.gen_obj.size(); ++k)
            nxt_off[k + 1] = nxt_off[k] + F.dims[nxt.gen_obj[k]];
        FpMat Dl(F.p, hom_dim(n + 1), hom_dim(n));
        for (size_t k = 0; k < nxt.gen_obj.size(); ++k) {
            int yk = nxt.gen_obj[k];
            const FpVec& dk = nxt.d[k];
            for (size_t b = 0; b < cur.basis[yk].size(); ++b) {
                if (!dk[b]) continue;
                auto [j, f] = cur.basis[yk][b];
                // contribution c * M(f): dims[x_j] -> dims[y_k]
                const FpMat& mf = F.mats[f];
                for (int r = 0; r < F.dims[yk]; ++r)
                    for (int c = 0; c < F.dims[cur.gen_obj[j]]; ++c)
                        Dl.at(nxt_off[k] + r, cur_off[j] + c) = uint8_t(
                            (Dl.at(nxt_off[k] + r, cur_off[j] + c) + dk[b] * mf.at(r, c)) % F.p);
            }
        }
        delta[n] = std::move(Dl);
    }
    std::vector<int> out(i_max + 1, 0);
    int prev_rank = 0;
    for (int n = 0; n <= i_max; ++n) {
        int rank = fp_rank(delta[n]);
        out[n] = (delta[n].cols - rank) - prev_rank;
        prev_rank = rank;
    }
    return out;
}

HigherLimitReport sharpness_slice(const CoefficientFunctor& F, ResolutionCache& R, int n,
                                  const ComparisonData& cmp, int i_max) {
    HigherLimitReport rep;
    const GroupTable& G = R.group();
    Subgroup full = full_subgroup(G);
    rep.target_dim = R.cohomology_dim(full, n);
    Lim0Result l0 = lim0(F);

    int total = l0.offsets.back();
    FpMat stacked(F.p, total, rep.target_dim);
    for (size_t x = 0; x < cmp.value_groups.size(); ++x) {
        FpMat res = R.restriction_map(cmp.value_groups[x], full, n);
        for (int r = 0; r < res.rows; ++r)
            for (int c = 0; c < res.cols; ++c) stacked.at(l0.offsets[x] + r, c) = res.at(r, c);
    }
    // the image must consist of compatible families
    FpSpace lim_space(F.p, total);
    for (int r = 0; r < l0.basis.rows; ++r) {
        FpVec v(total);
        for (int c = 0; c < total; ++c) v[c] = l0.basis.at(r, c);
        lim_space.insert(v);
    }
    for (int c = 0; c < stacked.cols; ++c) {
        FpVec v(total);
        for (int r = 0; r < total; ++r) v[r] = stacked.at(r, c);
        if (!lim_space.contains(v))
            throw std::runtime_error("comparison image is not a compatible family");
    }
    rep.restriction_image_rank = fp_rank(stacked);
    rep.comparison_rank = rep.restriction_image_rank;
    rep.comparison_injective = rep.comparison_rank == rep.target_dim;
    rep.comparison_surjective = rep.comparison_rank == l0.dim;

    rep.dims = higher_limits(F, i_max);
    if (rep.dims[0] != l0.dim)
        throw std::runtime_error("lim^0 mismatch between compatible families and Ext");
    return rep;
}

std::vector<int> bredon_cohomology(const GChainComplex& X, ResolutionCache& R, int n,
                                   int deg_max) {
    const Collection& C = *X.C;
    const GroupTable& G = *C.G;
    int top = int(X.chains.size()) - 1;
    int p = R.prime();
    // cochain dimensions
    std::vector<std::vector<int>> offs(top + 1);
    std::vector<int> cdim(std::max(top + 1, deg_max + 2), 0);
    for (int d = 0; d <= top; ++d) {
        offs[d].assign(X.rep_chain[d].size() + 1, 0);
        for (size_t o = 0; o < X.rep_chain[d].size(); ++o)
            offs[d][o + 1] = offs[d][o] + R.cohomology_dim(X.stab[d][o], n);
        cdim[d] = offs[d].back();
    }
    // differentials C^{d-1} -> C^d
    std::vector<FpMat> diff(top + 1);
    for (int d = 1; d <= top; ++d) {
        FpMat M(p, cdim[d], cdim[d - 1]);
        for (size_t o = 0; o < X.rep_chain[d].size(); ++o) {
            const auto& sigma = X.chains[d][X.rep_chain[d][o]];
            Subgroup Gs = X.stab[d][o];
            int sign = 1;
            for (size_t i = 0; i < sigma.size(); ++i) {
                std::vector<int> face;
                for (size_t j = 0; j < sigma.size(); ++j)
                    if (j != i) face.push_back(sigma[j]);
                // locate the face
                const auto& level = X.chains[d - 1];
                auto it = std::lower_bound(level.begin(), level.end(), face);
                int ci = int(it - level.begin());
                int o2 = X.orbit_of[d - 1][ci];
                int g = X.to_rep[d - 1][ci];  // face = g . rep
                Subgroup rep_stab = X.stab[d - 1][o2];
                FpMat cj = R.conjugation_map(g, rep_stab, n);
                Subgroup face_stab = conjugate_subgroup(G, rep_stab, g);
                FpMat res = R.restriction_map(Gs, face_stab, n);
                FpMat block = fp_mul(res, cj);
                int scale = sign > 0 ? 1 : p - 1;
                for (int r = 0; r < block.rows; ++r)
                    for (int c = 0; c < block.cols; ++c)
                        M.at(offs[d][o] + r, offs[d - 1][o2] + c) =
                            uint8_t((M.at(offs[d][o] + r, offs[d - 1][o2] + c) +
                                     scale * block.at(r, c)) %
                                    p);
                sign = -sign;
            }
        }
        diff[d] = std::move(M);
    }
    // d^2 = 0
    for (int d = 2; d <= top; ++d)
        if (!fp_mul(diff[d], diff[d - 1]).is_zero())
            throw std::runtime_error("bredon: differential does not square to zero");

    std::vector<int> out(deg_max + 1, 0);
    for (int d = 0; d <= deg_max; ++d) {
        int dim_d = d <= top ? cdim[d] : 0;
        int rank_out = (d + 1 <= top) ? fp_rank(diff[d + 1]) : 0;
        int rank_in = (d >= 1 && d <= top) ? fp_rank(diff[d]) : 0;
        out[d] = dim_d - rank_out - rank_in;
    }
    return out;
}

std::string to_string(SharpState s) {
    switch (s) {
        case SharpState::SHARP_UP_TO_BOUNDS: return "SHARP_UP_TO_BOUNDS";
        case SharpState::FAILS: return "FAILS";
        default: return "VACUOUS";
    }
}

SharpnessReport sharpness_check(const GroupTable& G, int p, Kind kind, Row type, int n_max,
                                int i_max, ResolutionCache& R) {
    SharpnessReport rep;
    rep.kind = kind;
    rep.type = type;
    rep.n_max = n_max;
    rep.i_max = i_max;
    Collection C = collect(G, p, kind);
    if (C.empty()) {
        rep.state = SharpState::VACUOUS;
        rep.detail = "empty collection (p does not divide |G| or no members)";
        return rep;
    }

    OrbitCategory O;
    ConjugacyCategory A;
    OrbitSimplexCategory S;
    GChainComplex X;
    if (type == Row::Subgroup) O = build_orbit_category(C);
    if (type == Row::Centralizer) A = build_conjugation_category(C);
    if (type == Row::Normalizer) {
        S = build_orbit_simplex_category(C);
        X = build_g_chain_complex(C);
    }

    for (int n = 0; n <= n_max; ++n) {
        CoefficientFunctor F;
        ComparisonData cmp;
        switch (type) {
            case Row::Subgroup: {
                F = beta_functor(O, R, n);
                for (int i = 0; i < C.size(); ++i) cmp.value_groups.push_back(C.members[i]);
                break;
            }
            case Row::Centralizer: {
                F = alpha_functor(A, R, n);
                for (int i = 0; i < C.size(); ++i) cmp.value_groups.push_back(C.centralizers[i]);
                break;
            }
            default: {
                F = delta_functor(S, R, n);
                for (int i = 0; i < S.cat.nobj; ++i) cmp.value_groups.push_back(S.stabilizer[i]);
                break;
            }
        }
        HigherLimitReport slice = sharpness_slice(F, R, n, cmp, i_max);
        std::vector<int> row = {slice.target_dim, slice.dims[0], slice.comparison_rank};
        for (int i = 1; i <= i_max; ++i) row.push_back(slice.dims[i]);
        rep.table.push_back(row);
        if (type == Row::Normalizer) {
            auto bd = bredon_cohomology(X, R, n, i_max);
            if (bd != slice.dims)
                throw std::runtime_error(
                    "normalizer higher limits disagree with the Bredon cochain complex");
            rep.bredon_dims.push_back(bd);
        }
    }

    // comparison failures across all degrees first, then acyclicity
    for (int n = 0; n <= n_max && rep.fail_n < 0; ++n) {
        const auto& row = rep.table[n];
        if (row[2] != row[0] || row[2] != row[1]) {
            rep.fail_n = n;
            rep.fail_i = 0;
            rep.detail = "comparison map not an isomorphism at n=" + std::to_string(n) +
                         " (rank " + std::to_string(row[2]) + ", target dim " +
                         std::to_string(row[0]) + ", lim0 " + std::to_string(row[1]) + ")";
        }
    }
    for (int n = 0; n <= n_max && rep.fail_n < 0; ++n)
        for (int i = 1; i <= i_max; ++i)
            if (rep.table[n][2 + i] != 0) {
                rep.fail_n = n;
                rep.fail_i = i;
                rep.detail = "lim^" + std::to_string(i) + " nonzero at n=" + std::to_string(n) +
                             " (dim " + std::to_string(rep.table[n][2 + i]) + ")";
                break;
            }
    rep.state = rep.fail_n < 0 ? SharpState::SHARP_UP_TO_BOUNDS : SharpState::FAILS;
    return rep;
}

}  // namespace sclab
