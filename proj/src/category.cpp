#include "sclab/category.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

namespace sclab {

void FiniteCat::finalize() {
    hom.assign(nobj, std::vector<std::vector<int>>(nobj));
    for (int f = 0; f < nmor(); ++f) hom[mors[f].src][mors[f].dst].push_back(f);
}

void FiniteCat::validate() const {
    int nm = nmor();
    for (int x = 0; x < nobj; ++x) {
        int e = id_of[x];
        if (mors[e].src != x || mors[e].dst != x) throw std::runtime_error("category: bad identity");
    }
    for (int f = 0; f < nm; ++f) {
        if (compose(f, id_of[mors[f].src]) != f || compose(id_of[mors[f].dst], f) != f)
            throw std::runtime_error("category: identity law fails");
        for (int g = 0; g < nm; ++g) {
            bool composable = mors[f].dst == mors[g].src;
            int gf = compose(g, f);
            if (composable != (gf >= 0)) throw std::runtime_error("category: composability table wrong");
            if (!composable) continue;
            if (mors[gf].src != mors[f].src || mors[gf].dst != mors[g].dst)
                throw std::runtime_error("category: composite endpoints wrong");
            for (int h = 0; h < nm; ++h) {
                if (mors[g].dst != mors[h].src) continue;
                if (compose(h, gf) != compose(compose(h, g), f))
                    throw std::runtime_error("category: associativity fails");
            }
        }
    }
}

FiniteCat FiniteCat::opposite() const {
    FiniteCat op;
    op.nobj = nobj;
    op.obj_label = obj_label;
    op.mors.resize(mors.size());
    for (size_t f = 0; f < mors.size(); ++f) op.mors[f] = {mors[f].dst, mors[f].src};
    op.id_of = id_of;
    op.comp.assign(comp.size(), -1);
    int nm = nmor();
    for (int f = 0; f < nm; ++f)
        for (int g = 0; g < nm; ++g) {
            // op-compose(g, f) with f: x->y, g: y->z in op == compose(f, g) in base
            if (op.mors[f].dst != op.mors[g].src) continue;
            op.comp[size_t(g) * nm + f] = comp[size_t(f) * nm + g];
        }
    op.finalize();
    return op;
}

OrbitCategory build_orbit_category(const Collection& C) {
    if (C.empty()) throw std::runtime_error("orbit category: empty collection");
    const GroupTable& G = *C.G;
    OrbitCategory out;
    out.C = &C;
    FiniteCat& cat = out.cat;
    cat.nobj = C.size();
    for (int i = 0; i < C.size(); ++i) cat.obj_label.push_back("G/" + std::to_string(i));

    // morphisms G/H -> G/K: cosets aK with a^{-1} H a <= K
    std::map<std::tuple<int, int, int>, int> index;  // (src, dst, canonical rep) -> morphism
    auto coset_min = [&](int a, int K) {
        int best = -1;
        C.members[K].members.for_each([&](int k) {
            int x = G.mul(a, k);
            if (best < 0 || x < best) best = x;
        });
        return best;
    };
    for (int H = 0; H < C.size(); ++H)
        for (int K = 0; K < C.size(); ++K) {
            for (int a = 0; a < G.n; ++a) {
                // a^{-1} H a <= K
                bool ok = true;
                C.members[H].members.for_each([&](int x) {
                    if (!ok) return;
                    if (!C.members[K].members.test(G.mul(G.mul(G.inv(a), x), a))) ok = false;
                });
                if (!ok) continue;
                int rep = coset_min(a, K);
                auto key = std::make_tuple(H, K, rep);
                if (!index.count(key)) {
                    index[key] = int(cat.mors.size());
                    cat.mors.push_back({H, K});
                    out.coset_rep.push_back(rep);
                }
            }
        }
    cat.id_of.assign(cat.nobj, -1);
    for (int i = 0; i < C.size(); ++i) {
        auto key = std::make_tuple(i, i, coset_min(0, i));
        cat.id_of[i] = index.at(key);
    }
    int nm = cat.nmor();
    cat.comp.assign(size_t(nm) * nm, -1);
    for (int f = 0; f < nm; ++f)
        for (int g = 0; g < nm; ++g) {
            if (cat.mors[f].dst != cat.mors[g].src) continue;
            // f = aK: H->K, g = bL: K->L, composite = abL : H->L
            int a = out.coset_rep[f], b = out.coset_rep[g];
            int L = cat.mors[g].dst;
            auto key = std::make_tuple(cat.mors[f].src, L, coset_min(G.mul(a, b), L));
            cat.comp[size_t(g) * nm + f] = index.at(key);
        }
    cat.finalize();
    cat.validate();
    return out;
}

ConjugacyCategory build_conjugation_category(const Collection& C) {
    if (C.empty()) throw std::runtime_error("conjugacy category: empty collection");
    const GroupTable& G = *C.G;
    ConjugacyCategory out;
    out.C = &C;
    FiniteCat& cat = out.cat;
    cat.nobj = C.size();
    for (int i = 0; i < C.size(); ++i) cat.obj_label.push_back("m" + std::to_string(i));

    // a morphism H -> K is the function x -> g x g^{-1}; identify it by its
    // value table on the members of H
    std::map<std::pair<std::pair<int, int>, std::vector<int>>, int> index;
    auto fn_table = [&](int H, int g) {
        std::vector<int> tbl;
        C.members[H].members.for_each([&](int x) { tbl.push_back(G.conj(g, x)); });
        return tbl;
    };
    for (int H = 0; H < C.size(); ++H)
        for (int K = 0; K < C.size(); ++K)
            for (int g = 0; g < G.n; ++g) {
                bool ok = true;
                C.members[H].members.for_each([&](int x) {
                    if (ok && !C.members[K].members.test(G.conj(g, x))) ok = false;
                });
                if (!ok) continue;
                auto key = std::make_pair(std::make_pair(H, K), fn_table(H, g));
                if (!index.count(key)) {
                    index[key] = int(cat.mors.size());
                    cat.mors.push_back({H, K});
                    out.witness.push_back(g);
                }
            }
    cat.id_of.assign(cat.nobj, -1);
    for (int i = 0; i < C.size(); ++i)
        cat.id_of[i] = index.at(std::make_pair(std::make_pair(i, i), fn_table(i, 0)));
    int nm = cat.nmor();
    cat.comp.assign(size_t(nm) * nm, -1);
    for (int f = 0; f < nm; ++f)
        for (int g = 0; g < nm; ++g) {
            if (cat.mors[f].dst != cat.mors[g].src) continue;
            int gf = G.mul(out.witness[g], out.witness[f]);
            auto key = std::make_pair(std::make_pair(cat.mors[f].src, cat.mors[g].dst),
                                      fn_table(cat.mors[f].src, gf));
            cat.comp[size_t(g) * nm + f] = index.at(key);
        }
    cat.finalize();
    cat.validate();
    return out;
}

Subgroup chain_stabilizer(const Collection& C, const std::vector<int>& chain) {
    DynBitset b = C.normalizers[chain[0]].members;
    for (size_t i = 1; i < chain.size(); ++i) b &= C.normalizers[chain[i]].members;
    return Subgroup(b);
}

namespace {

std::vector<std::vector<std::vector<int>>> all_chains(const Collection& C) {
    std::vector<std::vector<std::vector<int>>> out;
    int n = C.size();
    std::vector<std::vector<int>> ups(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && C.member_leq(i, j)) ups[i].push_back(j);
    std::vector<int> chain;
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
    for (int s = 0; s < n; ++s) {
        chain = {s};
        dfs(s);
    }
    for (auto& level : out) std::sort(level.begin(), level.end());
    return out;
}

std::vector<int> conj_chain(const Collection& C, const std::vector<int>& chain, int g) {
    std::vector<int> out(chain.size());
    for (size_t i = 0; i < chain.size(); ++i) out[i] = C.conj_member(g, chain[i]);
    return out;
}

}  // namespace

GChainComplex build_g_chain_complex(const Collection& C, long long seed) {
    const GroupTable& G = *C.G;
    GChainComplex X;
    X.C = &C;
    X.chains = all_chains(C);
    int dims = int(X.chains.size());
    X.orbit_of.resize(dims);
    X.rep_chain.resize(dims);
    X.to_rep.resize(dims);
    X.stab.resize(dims);
    std::vector<int> gens = G.gens;
    if (gens.empty())
        for (int g = 1; g < G.n; ++g) gens.push_back(g);
    std::mt19937 rng(seed < 0 ? 0 : uint32_t(seed));
    for (int d = 0; d < dims; ++d) {
        auto& level = X.chains[d];
        std::map<std::vector<int>, int> idx;
        for (size_t i = 0; i < level.size(); ++i) idx[level[i]] = int(i);
        int m = int(level.size());
        X.orbit_of[d].assign(m, -1);
        X.to_rep[d].assign(m, -1);
        for (int i = 0; i < m; ++i) {
            if (X.orbit_of[d][i] >= 0) continue;
            // collect the orbit with witnesses g: chain = g . start
            std::map<int, int> witness;  // chain index -> g
            std::vector<int> order;
            witness[i] = 0;
            order.push_back(i);
            size_t head = 0;
            while (head < order.size()) {
                int cur = order[head++];
                for (int g : gens) {
                    auto img = conj_chain(C, level[cur], g);
                    int j = idx.at(img);
                    if (!witness.count(j)) {
                        witness[j] = G.mul(g, witness[cur]);
                        order.push_back(j);
                    }
                }
            }
            // choose the representative
            int rep = order[0];
            if (seed < 0) {
                for (int j : order)
                    if (level[j] < level[rep]) rep = j;
            } else {
                std::uniform_int_distribution<int> pick(0, int(order.size()) - 1);
                rep = order[pick(rng)];
            }
            int orbit_id = int(X.rep_chain[d].size());
            X.rep_chain[d].push_back(rep);
            Subgroup st = chain_stabilizer(C, level[rep]);
            X.stab[d].push_back(st);
            // recompute witnesses relative to the chosen representative
            int g_rep = witness.at(rep);
            int g_rep_inv = G.inv(g_rep);
            for (int j : order) {
                X.orbit_of[d][j] = orbit_id;
                int g = G.mul(witness.at(j), g_rep_inv);  // j = g . rep
                if (seed >= 0) {
                    // push the witness around the stabilizer for variety
                    auto stab_el = st.members.bits();
                    std::uniform_int_distribution<int> pick(0, int(stab_el.size()) - 1);
                    g = G.mul(g, stab_el[pick(rng)]);
                }
                if (conj_chain(C, level[rep], g) != level[j])
                    throw std::runtime_error("orbit witness bookkeeping failed");
                X.to_rep[d][j] = g;
            }
        }
    }
    return X;
}

OrbitSimplexCategory build_orbit_simplex_category(const Collection& C) {
    if (C.empty()) throw std::runtime_error("orbit simplex category: empty collection");
    const GroupTable& G = *C.G;
    GChainComplex X = build_g_chain_complex(C);
    OrbitSimplexCategory out;
    out.C = &C;
    FiniteCat& cat = out.cat;

    // objects: one per chain orbit, all dimensions
    std::vector<std::pair<int, int>> obj;  // (dim, orbit id)
    std::map<std::pair<int, int>, int> obj_index;
    for (int d = 0; d < int(X.chains.size()); ++d)
        for (int o = 0; o < int(X.rep_chain[d].size()); ++o) {
            obj_index[{d, o}] = int(obj.size());
            obj.push_back({d, o});
        }
    cat.nobj = int(obj.size());
    for (int i = 0; i < cat.nobj; ++i) {
        auto [d, o] = obj[i];
        out.chain_rep.push_back(X.chains[d][X.rep_chain[d][o]]);
        out.stabilizer.push_back(X.stab[d][o]);
        out.obj_dim.push_back(d);
        cat.obj_label.push_back("[" + std::to_string(d) + "." + std::to_string(o) + "]");
    }

    // a morphism tau -> sigma for each subchain of tau conjugate to sigma;
    // the subchain is determined by the orders along sigma, so there is at
    // most one per object pair
    std::map<std::pair<int, int>, int> mor_index;
    auto orders_of = [&](const std::vector<int>& chain) {
        std::vector<int> o;
        for (int m : chain) o.push_back(C.members[m].order);
        return o;
    };
    auto find_chain = [&](const std::vector<int>& chain) {
        int d = int(chain.size()) - 1;
        const auto& level = X.chains[d];
        auto it = std::lower_bound(level.begin(), level.end(), chain);
        if (it == level.end() || *it != chain) throw std::runtime_error("chain lookup failed");
        return int(it - level.begin());
    };
    for (int t = 0; t < cat.nobj; ++t) {
        const auto& tau = out.chain_rep[t];
        // all subchains
        int k = int(tau.size());
        for (int mask = 1; mask < (1 << k); ++mask) {
            std::vector<int> sub;
            for (int b = 0; b < k; ++b)
                if (mask & (1 << b)) sub.push_back(tau[b]);
            int d = int(sub.size()) - 1;
            int ci = find_chain(sub);
            int o = X.orbit_of[d][ci];
            int s = obj_index.at({d, o});
            auto key = std::make_pair(t, s);
            // the subchain in a given class is unique: member orders along a
            // strict chain are distinct, so the class pins the level subset
            if (mor_index.count(key))
                throw std::runtime_error("orbit simplex category: non-unique face class");
            mor_index[key] = int(cat.mors.size());
            cat.mors.push_back({t, s});
            // conjugator g with g . sigma_rep = sub
            out.conjugator.push_back(X.to_rep[d][ci]);
        }
    }
    (void)orders_of;
    cat.id_of.assign(cat.nobj, -1);
    for (int i = 0; i < cat.nobj; ++i) cat.id_of[i] = mor_index.at({i, i});
    int nm = cat.nmor();
    cat.comp.assign(size_t(nm) * nm, -1);
    for (int f = 0; f < nm; ++f)
        for (int g = 0; g < nm; ++g) {
            // f: tau -> sigma, g: sigma -> rho; composite tau -> rho
            if (cat.mors[f].dst != cat.mors[g].src) continue;
            auto key = std::make_pair(cat.mors[f].src, cat.mors[g].dst);
            auto it = mor_index.find(key);
            if (it == mor_index.end())
                throw std::runtime_error("orbit simplex category: composite missing (not closed)");
            cat.comp[size_t(g) * nm + f] = it->second;
        }
    cat.finalize();
    cat.validate();
    return out;
}

}  // namespace sclab
