#include "sclab/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sclab/fp.hpp"
#include "sclab/smith.hpp"

namespace sclab {

void Poset::validate() const {
    for (int i = 0; i < n; ++i) {
        if (!le(i, i)) throw std::runtime_error("poset: not reflexive");
        for (int j = 0; j < n; ++j) {
            if (i != j && le(i, j) && le(j, i)) throw std::runtime_error("poset: not antisymmetric");
            if (!le(i, j)) continue;
            for (int k = 0; k < n; ++k)
                if (le(j, k) && !le(i, k)) throw std::runtime_error("poset: not transitive");
        }
    }
}

Poset poset_of(const Collection& C) {
    Poset P(C.size());
    P.leq = C.leq;
    for (int i = 0; i < P.n; ++i) P.leq[i].set(i);
    return P;
}

Poset sub_poset(const Poset& P, const std::vector<int>& keep) {
    Poset Q(int(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = 0; j < keep.size(); ++j)
            if (P.le(keep[i], keep[j])) Q.leq[i].set(int(j));
    return Q;
}

Poset join(const Poset& X, const Poset& Y) {
    Poset J(X.n + Y.n);
    for (int i = 0; i < X.n; ++i)
        for (int j = 0; j < X.n; ++j)
            if (X.le(i, j)) J.leq[i].set(j);
    for (int i = 0; i < Y.n; ++i)
        for (int j = 0; j < Y.n; ++j)
            if (Y.le(i, j)) J.leq[X.n + i].set(X.n + j);
    for (int i = 0; i < X.n; ++i)
        for (int j = 0; j < Y.n; ++j) J.leq[i].set(X.n + j);
    return J;
}

std::vector<int> below(const Poset& P, int x) {
    std::vector<int> out;
    for (int i = 0; i < P.n; ++i)
        if (i != x && P.le(i, x)) out.push_back(i);
    return out;
}

std::vector<int> above(const Poset& P, int x) {
    std::vector<int> out;
    for (int i = 0; i < P.n; ++i)
        if (i != x && P.le(x, i)) out.push_back(i);
    return out;
}

std::vector<int> link_elements(const Poset& P, int x) {
    std::vector<int> out = below(P, x);
    auto up = above(P, x);
    out.insert(out.end(), up.begin(), up.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> star_elements(const Poset& P, int x) {
    std::vector<int> out = link_elements(P, x);
    out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
}

FixedSubposets sub_posets(const Collection& C, const Subgroup& H) {
    FixedSubposets out;
    Subgroup CH = centralizer(*C.G, H);
    for (int i = 0; i < C.size(); ++i) {
        if (H.members.is_subset_of(C.normalizers[i].members)) out.fixed.push_back(i);
        if (H.members.is_subset_of(C.members[i].members)) out.above.push_back(i);
        if (C.members[i].members.is_subset_of(CH.members)) out.below_centralizer.push_back(i);
    }
    return out;
}

OrderComplex order_complex(const Poset& P) {
    OrderComplex X;
    if (P.n == 0) return X;
    std::vector<std::vector<int>> ups(P.n);  // strict up-sets
    for (int i = 0; i < P.n; ++i)
        for (int j = 0; j < P.n; ++j)
            if (i != j && P.le(i, j)) ups[i].push_back(j);

    std::vector<int> chain;
    auto& out = X.chains;
    std::function<void(int)> dfs = [&](int last) {
        int d = int(chain.size()) - 1;
        if (int(out.size()) <= d) out.resize(d + 1);
        out[d].push_back(chain);
        for (int nxt : ups[last]) {
            chain.push_back(nxt);
            dfs(nxt);
            chain.pop_back();
        }
    };
    for (int start = 0; start < P.n; ++start) {
        chain = {start};
        dfs(start);
    }
    X.dim = int(out.size()) - 1;
    return X;
}

namespace {

ZMat boundary_matrix(const OrderComplex& X, int d,
                     const std::map<std::vector<int>, int>& index_below) {
    // d >= 1: boundary from d-chains to (d-1)-chains
    const auto& top = X.chains[d];
    ZMat M(int(index_below.size()), int(top.size()));
    for (size_t c = 0; c < top.size(); ++c) {
        const auto& ch = top[c];
        int sign = 1;
        for (size_t i = 0; i < ch.size(); ++i) {
            std::vector<int> face;
            face.reserve(ch.size() - 1);
            for (size_t j = 0; j < ch.size(); ++j)
                if (j != i) face.push_back(ch[j]);
            M.at(index_below.at(face), int(c)) += sign;
            sign = -sign;
        }
    }
    return M;
}

FpMat boundary_matrix_fp(const ZMat& M, int p) {
    FpMat F(p, M.rows, M.cols);
    for (int r = 0; r < M.rows; ++r)
        for (int c = 0; c < M.cols; ++c) {
            long long v = M.at(r, c) % p;
            if (v < 0) v += p;
            F.at(r, c) = uint8_t(v);
        }
    return F;
}

}  // namespace

bool HomologyReport::trivial() const {
    for (auto b : betti_int)
        if (b) return false;
    for (auto b : betti_p)
        if (b) return false;
    for (auto& t : torsion)
        if (!t.empty()) return false;
    return true;
}

std::string HomologyReport::summary() const {
    std::ostringstream os;
    os << "bZ=[";
    for (size_t i = 0; i < betti_int.size(); ++i) {
        if (i) os << ",";
        os << betti_int[i];
        for (auto t : torsion[i]) os << "+Z/" << t;
    }
    os << "] bF" << prime << "=[";
    for (size_t i = 0; i < betti_p.size(); ++i) {
        if (i) os << ",";
        os << betti_p[i];
    }
    os << "] pi0=" << pi0;
    return os.str();
}

HomologyReport reduced_homology(const OrderComplex& X, int p) {
    HomologyReport rep;
    rep.prime = p;
    int dim = X.dim;
    // chain counts per degree, degree -1 present with one empty simplex
    std::vector<long long> counts(dim + 2, 0);
    counts[0] = 1;
    for (int d = 0; d <= dim; ++d) counts[d + 1] = (long long)X.chains[d].size();

    // ranks over Z and mod p of each boundary map; index b = degree d means
    // boundary C_d -> C_{d-1}, stored at position d+1
    std::vector<long long> rankZ(dim + 3, 0), rankP(dim + 3, 0);
    std::vector<std::vector<long long>> tors(dim + 3);

    if (dim >= 0) {
        ZMat aug(1, int(X.chains[0].size()));
        for (int c = 0; c < aug.cols; ++c) aug.at(0, c) = 1;
        auto inv = smith_invariant_factors(aug);
        rankZ[1] = (long long)inv.size();
        for (auto v : inv)
            if (v > 1) tors[1].push_back(v);
        rankP[1] = fp_rank(boundary_matrix_fp(aug, p));
    }
    for (int d = 1; d <= dim; ++d) {
        std::map<std::vector<int>, int> idx;
        for (size_t i = 0; i < X.chains[d - 1].size(); ++i) idx[X.chains[d - 1][i]] = int(i);
        ZMat B = boundary_matrix(X, d, idx);
        auto inv = smith_invariant_factors(B);
        rankZ[d + 1] = (long long)inv.size();
        for (auto v : inv)
            if (v > 1) tors[d + 1].push_back(v);
        rankP[d + 1] = fp_rank(boundary_matrix_fp(B, p));
    }

    rep.betti_int.assign(dim + 2, 0);
    rep.betti_p.assign(dim + 2, 0);
    rep.torsion.assign(dim + 2, {});
    for (int d = -1; d <= dim; ++d) {
        int pos = d + 1;
        rep.betti_int[pos] = counts[pos] - rankZ[pos] - rankZ[pos + 1];
        rep.betti_p[pos] = counts[pos] - rankP[pos] - rankP[pos + 1];
        // torsion of H_d comes from the boundary one degree up
        rep.torsion[pos] = tors[pos + 1];
    }
    rep.euler_reduced = 0;
    for (int d = -1; d <= dim; ++d) rep.euler_reduced += (d % 2 == 0 ? 1 : -1) * counts[d + 1];
    // connected components
    if (dim < 0) {
        rep.pi0 = 0;
    } else {
        int nv = int(X.chains[0].size());
        std::vector<int> parent(nv);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::map<int, int> vert_index;
        for (int i = 0; i < nv; ++i) vert_index[X.chains[0][i][0]] = i;
        if (dim >= 1)
            for (const auto& e : X.chains[1])
                parent[find(vert_index[e[0]])] = find(vert_index[e[1]]);
        int comps = 0;
        for (int i = 0; i < nv; ++i)
            if (find(i) == i) ++comps;
        rep.pi0 = comps;
    }
    return rep;
}

HomologyReport reduced_homology_of_poset(const Poset& P, int p) {
    return reduced_homology(order_complex(P), p);
}

std::string to_string(ContractStatus s) {
    switch (s) {
        case ContractStatus::CERTIFIED: return "CERTIFIED";
        case ContractStatus::NOT_CONTRACTIBLE: return "NOT_CONTRACTIBLE";
        default: return "UNKNOWN";
    }
}

ContractReport contractibility(const Poset& P, int p) {
    ContractReport rep;
    if (P.n == 0) {
        rep.status = ContractStatus::NOT_CONTRACTIBLE;
        rep.homology = reduced_homology_of_poset(P, p);
        return rep;
    }
    std::vector<char> alive(P.n, 1);
    int alive_count = P.n;
    ContractionCertificate cert;
    bool progress = true;
    while (alive_count > 1 && progress) {
        progress = false;
        for (int x = 0; x < P.n && alive_count > 1; ++x) {
            if (!alive[x]) continue;
            // up-set and down-set within the live poset
            int target = -1;
            Direction dir = Direction::GE;
            {
                std::vector<int> up;
                for (int y = 0; y < P.n; ++y)
                    if (alive[y] && y != x && P.le(x, y)) up.push_back(y);
                if (!up.empty()) {
                    int m = -1;
                    for (int c : up) {
                        bool is_min = true;
                        for (int o : up)
                            if (!P.le(c, o)) { is_min = false; break; }
                        if (is_min) { m = c; break; }
                    }
                    if (m >= 0) { target = m; dir = Direction::GE; }
                }
            }
            if (target < 0) {
                std::vector<int> down;
                for (int y = 0; y < P.n; ++y)
                    if (alive[y] && y != x && P.le(y, x)) down.push_back(y);
                if (!down.empty()) {
                    int m = -1;
                    for (int c : down) {
                        bool is_max = true;
                        for (int o : down)
                            if (!P.le(o, c)) { is_max = false; break; }
                        if (is_max) { m = c; break; }
                    }
                    if (m >= 0) { target = m; dir = Direction::LE; }
                }
            }
            if (target >= 0) {
                ContractionStep step;
                step.image_of.assign(P.n, -1);
                for (int y = 0; y < P.n; ++y)
                    if (alive[y]) step.image_of[y] = y;
                step.image_of[x] = target;
                step.direction = dir;
                cert.steps.push_back(std::move(step));
                alive[x] = 0;
                --alive_count;
                progress = true;
            }
        }
    }
    if (alive_count == 1) {
        for (int x = 0; x < P.n; ++x)
            if (alive[x]) cert.terminal = x;
        rep.status = ContractStatus::CERTIFIED;
        rep.certificate = std::move(cert);
        Poset pt(1);
        rep.homology = reduced_homology_of_poset(pt, p);
        return rep;
    }
    // stuck: decide from the homology of the core (same homotopy type)
    std::vector<int> keep;
    for (int x = 0; x < P.n; ++x)
        if (alive[x]) keep.push_back(x);
    rep.homology = reduced_homology_of_poset(sub_poset(P, keep), p);
    rep.status = rep.homology.trivial() ? ContractStatus::UNKNOWN : ContractStatus::NOT_CONTRACTIBLE;
    return rep;
}

bool verify_certificate(const Poset& P, const ContractionCertificate& cert, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    std::vector<char> cur(P.n, 1);
    int count = P.n;
    for (size_t s = 0; s < cert.steps.size(); ++s) {
        const auto& st = cert.steps[s];
        if (int(st.image_of.size()) != P.n) return fail("step map has wrong size");
        std::vector<char> next(P.n, 0);
        for (int x = 0; x < P.n; ++x) {
            if (!cur[x]) continue;
            int fx = st.image_of[x];
            if (fx < 0 || fx >= P.n) return fail("step " + std::to_string(s) + " undefined on a live element");
            if (!cur[fx]) return fail("step " + std::to_string(s) + " maps outside the current subposet");
            bool ok = st.direction == Direction::GE ? P.le(x, fx) : P.le(fx, x);
            if (!ok) return fail("step " + std::to_string(s) + " not comparable to the identity");
        }
        for (int x = 0; x < P.n; ++x) {
            if (!cur[x]) continue;
            for (int y = 0; y < P.n; ++y) {
                if (!cur[y] || !P.le(x, y)) continue;
                if (!P.le(st.image_of[x], st.image_of[y]))
                    return fail("step " + std::to_string(s) + " not monotone");
            }
        }
        count = 0;
        for (int x = 0; x < P.n; ++x) {
            if (cur[x]) next[st.image_of[x]] = 1;
        }
        cur = next;
        for (int x = 0; x < P.n; ++x) count += cur[x];
    }
    if (count != 1) return fail("composite is not constant");
    if (cert.terminal < 0 || !cur[cert.terminal]) return fail("terminal point mismatch");
    return true;
}

}  // namespace sclab
