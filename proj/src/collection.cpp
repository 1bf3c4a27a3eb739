#include "sclab/collection.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "sclab/subgroups.hpp"

namespace sclab {

Kind kind_from_string(const std::string& s) {
    if (s == "S") return Kind::S;
    if (s == "B") return Kind::B;
    if (s == "Ce") return Kind::Ce;
    if (s == "BCe") return Kind::BCe;
    if (s == "D") return Kind::D;
    if (s == "I") return Kind::I;
    if (s == "A") return Kind::A;
    if (s == "Z") return Kind::Z;
    if (s == "E") return Kind::E;
    throw std::runtime_error("unknown collection kind '" + s + "' (expected S B Ce BCe D I A Z E)");
}

std::string kind_to_string(Kind k) {
    switch (k) {
        case Kind::S: return "S";
        case Kind::B: return "B";
        case Kind::Ce: return "Ce";
        case Kind::BCe: return "BCe";
        case Kind::D: return "D";
        case Kind::I: return "I";
        case Kind::A: return "A";
        case Kind::Z: return "Z";
        case Kind::E: return "E";
        default: return "custom";
    }
}

int Collection::index_of(const DynBitset& bits) const {
    for (size_t i = 0; i < members.size(); ++i)
        if (members[i].members == bits) return int(i);
    return -1;
}

int Collection::conj_member(int g, int i) const {
    Subgroup c = conjugate_subgroup(*G, members[i], g);
    int j = index_of(c.members);
    if (j < 0) throw std::runtime_error("collection is not conjugation closed");
    return j;
}

std::vector<Subgroup> p_subgroup_pool(const GroupTable& G, int p) {
    if (!is_prime(p)) throw std::runtime_error("p_subgroup_pool: p not prime");
    std::vector<Subgroup> pool;
    if (G.n % p != 0) return pool;
    Subgroup S = sylow_p(G, p);
    LocalGroup L = subgroup_table(G, S);
    auto local_subs = subgroups_all(L.table);
    std::unordered_set<DynBitset, DynBitsetHash> seen;
    std::vector<int> gens = G.gens;
    if (gens.empty())
        for (int g = 1; g < G.n; ++g) gens.push_back(g);
    std::vector<Subgroup> frontier;
    for (const auto& ls : local_subs) {
        if (ls.order == 1) continue;
        DynBitset amb(G.n);
        ls.members.for_each([&](int li) { amb.set(L.to_ambient[li]); });
        Subgroup s{amb};
        if (seen.insert(s.members).second) {
            pool.push_back(s);
            frontier.push_back(s);
        }
    }
    size_t head = 0;
    while (head < frontier.size()) {
        Subgroup cur = frontier[head++];
        for (int g : gens) {
            Subgroup c = conjugate_subgroup(G, cur, g);
            if (seen.insert(c.members).second) {
                pool.push_back(c);
                frontier.push_back(c);
            }
        }
    }
    sort_canonical(pool);
    return pool;
}

MembershipFlags membership_tests(const GroupTable& G, int p, const Subgroup& Q) {
    if (Q.order <= 1 || !is_p_group_order(Q.order, p))
        throw std::runtime_error("membership_tests: Q must be a nontrivial p-subgroup");
    MembershipFlags out;
    Subgroup N = normalizer(G, Q);
    Subgroup C = centralizer(G, Q);
    {
        LocalGroup LN = subgroup_table(G, N);
        DynBitset qloc(LN.table.n);
        Q.members.for_each([&](int x) { qloc.set(LN.to_local[x]); });
        auto qr = quotient(LN.table, Subgroup(qloc));
        out.radical = o_p(qr.table, full_subgroup(qr.table), p).order == 1;
    }
    Subgroup ZQ = center_of(G, Q);
    out.centric = ZQ.order == p_part(C.order, p);
    if (out.centric) {
        Subgroup QC = product_subgroup(G, Q, C);
        LocalGroup LN = subgroup_table(G, N);
        DynBitset qcloc(LN.table.n);
        QC.members.for_each([&](int x) { qcloc.set(LN.to_local[x]); });
        auto qr = quotient(LN.table, Subgroup(qcloc));
        out.principal_radical = o_p(qr.table, full_subgroup(qr.table), p).order == 1;
    }
    return out;
}

namespace {

std::vector<Subgroup> sylow_intersections(const GroupTable& G, int p) {
    auto syl = all_sylows(G, p);
    std::vector<Subgroup> out;
    std::unordered_set<DynBitset, DynBitsetHash> seen;
    for (const auto& s : syl)
        if (seen.insert(s.members).second) out.push_back(s);
    std::vector<Subgroup> frontier = out;
    size_t head = 0;
    while (head < frontier.size()) {
        Subgroup cur = frontier[head++];
        for (const auto& s : syl) {
            Subgroup m = intersect(cur, s);
            if (m.order == 1) continue;
            if (seen.insert(m.members).second) {
                out.push_back(m);
                frontier.push_back(m);
            }
        }
    }
    return out;
}

std::vector<Subgroup> benson_e_collection(const GroupTable& G, int p) {
    auto syl = all_sylows(G, p);
    if (syl.empty()) return {};
    // fixed Sylow: lex-min bitmap; the choice washes out after closure
    Subgroup S = syl[0];
    for (const auto& s : syl)
        if (s.members.lex_less(S.members)) S = s;
    Subgroup ZS = center_of(G, S);
    std::vector<Subgroup> out;
    std::unordered_set<DynBitset, DynBitsetHash> seen;
    auto push = [&](const Subgroup& s) {
        if (seen.insert(s.members).second) {
            out.push_back(s);
            return true;
        }
        return false;
    };
    ZS.members.for_each([&](int x) {
        if (x != 0 && G.pow(x, p) == 0) push(closure(G, {x}));
    });
    std::vector<int> gens = G.gens;
    if (gens.empty())
        for (int g = 1; g < G.n; ++g) gens.push_back(g);
    bool grew = true;
    while (grew) {
        grew = false;
        size_t cur = out.size();
        for (size_t i = 0; i < cur; ++i)
            for (int g : gens)
                if (push(conjugate_subgroup(G, out[i], g))) grew = true;
        cur = out.size();
        for (size_t i = 0; i < cur; ++i)
            for (size_t j = i + 1; j < cur; ++j) {
                if (out[i].members.is_subset_of(out[j].members) ||
                    out[j].members.is_subset_of(out[i].members))
                    continue;
                if (!commute_elementwise(G, out[i], out[j])) continue;
                if (push(product_subgroup(G, out[i], out[j]))) grew = true;
            }
    }
    return out;
}

Subgroup omega1_opz_centralizer(const GroupTable& G, int p, const Subgroup& V) {
    Subgroup C = centralizer(G, V);
    Subgroup ZC = center_of(G, C);
    // O_p of an abelian group: its elements of p-power order
    DynBitset b(G.n);
    ZC.members.for_each([&](int x) {
        if (is_p_group_order(G.element_order(x), p)) b.set(x);
    });
    return omega1(G, Subgroup(b), p);
}

void attach_structure(Collection& C) {
    const GroupTable& G = *C.G;
    int m = C.size();
    C.normalizers.reserve(m);
    C.centralizers.reserve(m);
    for (int i = 0; i < m; ++i) {
        C.normalizers.push_back(normalizer(G, C.members[i]));
        C.centralizers.push_back(centralizer(G, C.members[i]));
    }
    C.leq.assign(m, DynBitset(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (C.members[i].members.is_subset_of(C.members[j].members)) C.leq[i].set(j);

    std::vector<int> gens = G.gens;
    if (gens.empty())
        for (int g = 1; g < G.n; ++g) gens.push_back(g);
    std::unordered_map<DynBitset, int, DynBitsetHash> lookup;
    for (int i = 0; i < m; ++i) lookup[C.members[i].members] = i;
    C.gen_action.assign(gens.size(), std::vector<int>(m, -1));
    for (size_t gi = 0; gi < gens.size(); ++gi)
        for (int i = 0; i < m; ++i) {
            auto it = lookup.find(conjugate_subgroup(G, C.members[i], gens[gi]).members);
            if (it == lookup.end()) throw std::runtime_error("collection not conjugation closed");
            C.gen_action[gi][i] = it->second;
        }

    C.class_of.assign(m, -1);
    for (int i = 0; i < m; ++i) {
        if (C.class_of[i] >= 0) continue;
        int cls = int(C.class_reps.size());
        std::vector<int> orbit = {i};
        C.class_of[i] = cls;
        size_t head = 0;
        while (head < orbit.size()) {
            int cur = orbit[head++];
            for (size_t gi = 0; gi < gens.size(); ++gi) {
                int nxt = C.gen_action[gi][cur];
                if (C.class_of[nxt] < 0) {
                    C.class_of[nxt] = cls;
                    orbit.push_back(nxt);
                }
            }
        }
        int best = orbit[0];
        for (int j : orbit)
            if (C.members[j].members.lex_less(C.members[best].members)) best = j;
        C.class_reps.push_back(best);
    }
}

}  // namespace

Collection make_custom_collection(const GroupTable& G, int p, std::vector<Subgroup> members) {
    Collection C;
    C.G = &G;
    C.p = p;
    C.kind = Kind::Custom;
    sort_canonical(members);
    C.members = std::move(members);
    for (const auto& s : C.members)
        if (s.order <= 1 || !is_p_group_order(s.order, p))
            throw std::runtime_error("collection members must be nontrivial p-subgroups");
    attach_structure(C);
    return C;
}

Collection collect(const GroupTable& G, int p, Kind kind) {
    if (!is_prime(p)) throw std::runtime_error("collect: p not prime");
    std::vector<Subgroup> members;
    if (G.n % p == 0) {
        switch (kind) {
            case Kind::I:
                members = sylow_intersections(G, p);
                break;
            case Kind::E:
                members = benson_e_collection(G, p);
                break;
            default: {
                auto pool = p_subgroup_pool(G, p);
                for (const auto& Q : pool) {
                    bool in = false;
                    switch (kind) {
                        case Kind::S: in = true; break;
                        case Kind::B: in = membership_tests(G, p, Q).radical; break;
                        case Kind::Ce: in = membership_tests(G, p, Q).centric; break;
                        case Kind::BCe: {
                            auto f = membership_tests(G, p, Q);
                            in = f.radical && f.centric;
                            break;
                        }
                        case Kind::D: in = membership_tests(G, p, Q).principal_radical; break;
                        case Kind::A: in = is_elementary_abelian(G, Q, p); break;
                        case Kind::Z:
                            in = is_elementary_abelian(G, Q, p) &&
                                 omega1_opz_centralizer(G, p, Q).members == Q.members;
                            break;
                        default: throw std::runtime_error("collect: unsupported kind");
                    }
                    if (in) members.push_back(Q);
                }
                break;
            }
        }
    }
    Collection C;
    C.G = &G;
    C.p = p;
    C.kind = kind;
    sort_canonical(members);
    C.members = std::move(members);
    attach_structure(C);
    return C;
}

MonotoneEndomorphism endo_sylow_intersection(const Collection& C) {
    const GroupTable& G = *C.G;
    auto syl = all_sylows(G, C.p);
    MonotoneEndomorphism F;
    F.domain = &C;
    F.direction = Direction::GE;
    F.image_of.resize(C.size());
    for (int i = 0; i < C.size(); ++i) {
        DynBitset meet;
        bool first = true;
        for (const auto& s : syl)
            if (C.members[i].members.is_subset_of(s.members)) {
                if (first) {
                    meet = s.members;
                    first = false;
                } else {
                    meet &= s.members;
                }
            }
        if (first) throw std::runtime_error("member not contained in any Sylow subgroup");
        int j = C.index_of(meet);
        if (j < 0) throw std::runtime_error("sylow-intersection image leaves the collection");
        F.image_of[i] = j;
    }
    F.centralizer_growth = true;
    for (int i = 0; i < C.size() && F.centralizer_growth; ++i)
        if (!C.centralizers[i].members.is_subset_of(C.centralizers[F.image_of[i]].members))
            F.centralizer_growth = false;
    return F;
}

MonotoneEndomorphism endo_Z(const Collection& C) {
    if (C.kind != Kind::A && C.kind != Kind::Custom)
        throw std::runtime_error("endo_Z expects the elementary abelian collection");
    const GroupTable& G = *C.G;
    MonotoneEndomorphism F;
    F.domain = &C;
    F.direction = Direction::GE;
    F.image_of.resize(C.size());
    for (int i = 0; i < C.size(); ++i) {
        Subgroup img = omega1_opz_centralizer(G, C.p, C.members[i]);
        int j = C.index_of(img.members);
        if (j < 0) throw std::runtime_error("endo_Z image leaves the collection");
        F.image_of[i] = j;
    }
    F.centralizer_growth = true;
    for (int i = 0; i < C.size() && F.centralizer_growth; ++i)
        if (!C.centralizers[i].members.is_subset_of(C.centralizers[F.image_of[i]].members))
            F.centralizer_growth = false;
    return F;
}

MonotoneEndomorphism iterate_to_fixpoint(const MonotoneEndomorphism& F) {
    const Collection& C = *F.domain;
    MonotoneEndomorphism out = F;
    int bound = C.G->n;
    for (int it = 0; it < bound; ++it) {
        bool stable = true;
        std::vector<int> next(C.size());
        for (int i = 0; i < C.size(); ++i) {
            next[i] = F.image_of[out.image_of[i]];
            if (next[i] != out.image_of[i]) stable = false;
        }
        if (stable) return out;
        out.image_of = std::move(next);
    }
    throw std::runtime_error("iterate_to_fixpoint: no stabilization within |G| iterations");
}

MonotoneEndomorphism identity_endo(const Collection& C) {
    MonotoneEndomorphism F;
    F.domain = &C;
    F.direction = Direction::GE;
    F.centralizer_growth = true;
    F.image_of.resize(C.size());
    for (int i = 0; i < C.size(); ++i) F.image_of[i] = i;
    return F;
}

EndoCheckReport check_endomorphism(const Collection& C, const MonotoneEndomorphism& F) {
    EndoCheckReport rep;
    if (int(F.image_of.size()) != C.size()) {
        rep.violation = "map not defined on all members";
        return rep;
    }
    // equivariance on generators extends to the whole group
    for (size_t gi = 0; gi < C.gen_action.size(); ++gi)
        for (int i = 0; i < C.size(); ++i) {
            int lhs = F.image_of[C.gen_action[gi][i]];
            int rhs = C.gen_action[gi][F.image_of[i]];
            if (lhs != rhs) {
                rep.violation = "not equivariant at member " + std::to_string(i) +
                                " under generator " + std::to_string(gi);
                return rep;
            }
        }
    for (int i = 0; i < C.size(); ++i)
        for (int j = 0; j < C.size(); ++j)
            if (C.member_leq(i, j) && !C.member_leq(F.image_of[i], F.image_of[j])) {
                rep.violation =
                    "not monotone on pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
                return rep;
            }
    for (int i = 0; i < C.size(); ++i) {
        bool ok = F.direction == Direction::GE ? C.member_leq(i, F.image_of[i])
                                               : C.member_leq(F.image_of[i], i);
        if (!ok) {
            rep.violation = "direction fails at member " + std::to_string(i);
            return rep;
        }
    }
    bool cent_growth = true;
    for (int i = 0; i < C.size() && cent_growth; ++i)
        if (!C.centralizers[i].members.is_subset_of(C.centralizers[F.image_of[i]].members))
            cent_growth = false;
    if (F.centralizer_growth && !cent_growth) {
        rep.violation = "claimed centralizer growth fails";
        return rep;
    }
    rep.pass = true;
    rep.conclusion_orbit_row = F.direction == Direction::GE;
    rep.conclusion_conjugacy_row = cent_growth || F.direction == Direction::LE;
    rep.conclusion_poset_row = true;
    std::vector<char> in_img(C.size(), 0);
    for (int i = 0; i < C.size(); ++i) in_img[F.image_of[i]] = 1;
    for (int i = 0; i < C.size(); ++i)
        if (in_img[i]) rep.image_members.push_back(i);
    return rep;
}

ClosureReport closure_check(const Collection& C, ClosureMode mode) {
    ClosureReport rep;
    const GroupTable& G = *C.G;
    if (mode == ClosureMode::Overgroups) {
        auto pool = p_subgroup_pool(G, C.p);
        for (int i = 0; i < C.size(); ++i)
            for (const auto& R : pool) {
                if (!C.members[i].members.is_subset_of(R.members)) continue;
                if (C.index_of(R.members) < 0) {
                    rep.closed = false;
                    rep.witness_member = i;
                    rep.witness_subgroup = R;
                    return rep;
                }
            }
    } else {
        for (int i = 0; i < C.size(); ++i) {
            LocalGroup L = subgroup_table(G, C.members[i]);
            auto subs = subgroups_all(L.table);
            for (const auto& ls : subs) {
                if (ls.order <= 1) continue;
                DynBitset amb(G.n);
                ls.members.for_each([&](int li) { amb.set(L.to_ambient[li]); });
                if (C.index_of(amb) < 0) {
                    rep.closed = false;
                    rep.witness_member = i;
                    rep.witness_subgroup = Subgroup(amb);
                    return rep;
                }
            }
        }
    }
    return rep;
}

}  // namespace sclab
