#include "sclab/equivalence.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "sclab/subgroups.hpp"

namespace sclab {

Row row_from_string(const std::string& s) {
    if (s == "subgroup") return Row::Subgroup;
    if (s == "normalizer") return Row::Normalizer;
    if (s == "centralizer") return Row::Centralizer;
    throw std::runtime_error("unknown row '" + s + "' (expected subgroup|normalizer|centralizer)");
}

std::string row_to_string(Row r) {
    switch (r) {
        case Row::Subgroup: return "subgroup";
        case Row::Normalizer: return "normalizer";
        default: return "centralizer";
    }
}

Scope scope_from_string(const std::string& s) {
    if (s == "plain") return Scope::Plain;
    if (s == "sylow") return Scope::Sylow;
    if (s == "full") return Scope::Full;
    throw std::runtime_error("unknown scope '" + s + "' (expected plain|sylow|full)");
}

std::string scope_to_string(Scope s) {
    switch (s) {
        case Scope::Plain: return "plain";
        case Scope::Sylow: return "sylow";
        default: return "full";
    }
}

std::vector<Subgroup> scope_subgroups(const GroupTable& G, int p, Scope scope) {
    if (scope == Scope::Plain) return {trivial_subgroup(G)};
    if (scope == Scope::Sylow) {
        auto syl = all_sylows(G, p);
        if (syl.empty()) return {trivial_subgroup(G)};
        Subgroup S = syl[0];
        for (const auto& s : syl)
            if (s.members.lex_less(S.members)) S = s;
        LocalGroup L = subgroup_table(G, S);
        auto subs = subgroups_all(L.table);
        std::vector<Subgroup> ambient;
        for (const auto& ls : subs) {
            DynBitset b(G.n);
            ls.members.for_each([&](int li) { b.set(L.to_ambient[li]); });
            ambient.push_back(Subgroup(b));
        }
        auto cls = conjugacy_classes(G, [&] {
            // conjugation closure first: class machinery wants a closed list
            std::vector<Subgroup> closed = ambient;
            std::unordered_set<DynBitset, DynBitsetHash> seen;
            for (auto& s : closed) seen.insert(s.members);
            size_t head = 0;
            std::vector<int> gens = G.gens;
            if (gens.empty())
                for (int g = 1; g < G.n; ++g) gens.push_back(g);
            while (head < closed.size()) {
                Subgroup cur = closed[head++];
                for (int g : gens) {
                    Subgroup c = conjugate_subgroup(G, cur, g);
                    if (seen.insert(c.members).second) closed.push_back(c);
                }
            }
            sort_canonical(closed);
            return closed;
        }());
        return cls.reps;
    }
    auto subs = subgroups_all(G);
    return conjugacy_classes(G, subs).reps;
}

namespace {

std::vector<int> row_subposet(const Collection& C, Row row, const Subgroup& H) {
    FixedSubposets fp = sub_posets(C, H);
    switch (row) {
        case Row::Subgroup: return fp.above;
        case Row::Normalizer: return fp.fixed;
        default: return fp.below_centralizer;
    }
}

}  // namespace

EvidenceReport equivalence_evidence(const Collection& C1, const Collection& C2, Row row,
                                    Scope scope) {
    if (C1.G != C2.G || C1.p != C2.p)
        throw std::runtime_error("equivalence_evidence: collections must share group and prime");
    const GroupTable& G = *C1.G;
    EvidenceReport rep;
    rep.row = row;
    rep.scope = scope;
    auto tests = scope_subgroups(G, C1.p, scope);
    for (size_t t = 0; t < tests.size(); ++t) {
        const Subgroup& H = tests[t];
        Poset P1 = poset_of(C1);
        Poset P2 = poset_of(C2);
        auto left = reduced_homology_of_poset(sub_poset(P1, row_subposet(C1, row, H)), C1.p);
        auto right = reduced_homology_of_poset(sub_poset(P2, row_subposet(C2, row, H)), C1.p);
        EvidenceRow r;
        r.h_class_id = int(t);
        r.h_order = H.order;
        r.left = left;
        r.right = right;
        r.match = left == right;
        if (!r.match && rep.mismatch_class < 0) rep.mismatch_class = int(t);
        rep.evidence_pass = rep.evidence_pass && r.match;
        rep.rows.push_back(std::move(r));
    }
    return rep;
}

namespace {

// removed class representatives of C \ Csub
std::vector<int> removed_class_reps(const Collection& C, const Collection& Csub) {
    std::vector<int> out;
    for (int rep : C.class_reps) {
        if (Csub.index_of(C.members[rep].members) < 0) out.push_back(rep);
    }
    // validate Csub subset of C
    for (int i = 0; i < Csub.size(); ++i)
        if (C.index_of(Csub.members[i].members) < 0)
            throw std::runtime_error("removal_check: C' is not a subcollection of C");
    return out;
}

std::vector<int> strictly_above(const Collection& C, int P) {
    std::vector<int> out;
    for (int j = 0; j < C.size(); ++j)
        if (j != P && C.member_leq(P, j)) out.push_back(j);
    return out;
}

std::vector<int> strictly_below(const Collection& C, int P) {
    std::vector<int> out;
    for (int j = 0; j < C.size(); ++j)
        if (j != P && C.member_leq(j, P)) out.push_back(j);
    return out;
}

}  // namespace

RemovalReport removal_check(const Collection& C, const Collection& Csub, RemovalVariant variant) {
    RemovalReport rep;
    const GroupTable& G = *C.G;
    auto removed = removed_class_reps(C, Csub);
    Poset P = poset_of(C);
    bool all_ok = true;
    for (int m : removed) {
        RemovalClassReport r;
        r.member = m;
        if (variant == RemovalVariant::AboveContractible ||
            variant == RemovalVariant::BelowContractible) {
            auto elems = variant == RemovalVariant::AboveContractible ? strictly_above(C, m)
                                                                      : strictly_below(C, m);
            auto cr = contractibility(sub_poset(P, elems), C.p);
            r.status = cr.status;
            r.detail = variant == RemovalVariant::AboveContractible ? "C_{>P}" : "C_{<P}";
        } else {
            // N_G(P)-contractibility evidence: every fixed subposet under
            // K <= N_G(P) is contractible, on one side or the other
            Subgroup N = C.normalizers[m];
            LocalGroup LN = subgroup_table(G, N);
            auto nsubs = subgroups_all(LN.table);
            std::vector<Subgroup> ambient;
            for (const auto& ls : nsubs) {
                DynBitset b(G.n);
                ls.members.for_each([&](int li) { b.set(LN.to_ambient[li]); });
                ambient.push_back(Subgroup(b));
            }
            auto side_ok = [&](bool above_side) {
                for (const auto& K : ambient) {
                    auto elems = above_side ? strictly_above(C, m) : strictly_below(C, m);
                    std::vector<int> fixed;
                    for (int j : elems)
                        if (K.members.is_subset_of(C.normalizers[j].members)) fixed.push_back(j);
                    auto cr = contractibility(sub_poset(P, fixed), C.p);
                    if (cr.status != ContractStatus::CERTIFIED) return false;
                }
                return true;
            };
            if (side_ok(true)) {
                r.status = ContractStatus::CERTIFIED;
                r.detail = "(C_{>P})^K for all K <= N_G(P)";
            } else if (side_ok(false)) {
                r.status = ContractStatus::CERTIFIED;
                r.detail = "(C_{<P})^K for all K <= N_G(P)";
            } else {
                r.status = ContractStatus::UNKNOWN;
                r.detail = "no side is equivariantly contractible";
            }
        }
        if (r.status != ContractStatus::CERTIFIED) all_ok = false;
        rep.removed.push_back(std::move(r));
    }
    rep.pass = all_ok;
    if (removed.empty()) {
        rep.pass = true;
        rep.conclusion = "nothing removed; vacuous";
    } else if (rep.pass) {
        switch (variant) {
            case RemovalVariant::AboveContractible:
                rep.conclusion = "subgroup-row spaces of C' and C are G-equivalent";
                break;
            case RemovalVariant::BelowContractible:
                rep.conclusion = "centralizer-row spaces of C' and C are G-equivalent";
                break;
            default:
                rep.conclusion = "normalizer-row spaces |C'| and |C| are G-equivalent";
                break;
        }
    } else {
        rep.conclusion = "hypotheses fail; no conclusion";
    }
    return rep;
}

ContractionCertificate radical_zigzag(const Collection& C, int member_P,
                                      const std::vector<int>& elems, Poset* out_poset) {
    const GroupTable& G = *C.G;
    Subgroup N = C.normalizers[member_P];
    Subgroup O = o_p(G, N, C.p);
    Poset sub = sub_poset(poset_of(C), elems);
    if (out_poset) *out_poset = sub;
    int n = int(elems.size());

    auto find_local = [&](const DynBitset& bits) {
        int global = C.index_of(bits);
        for (int i = 0; i < n; ++i)
            if (elems[i] == global) return i;
        throw std::runtime_error("zigzag image leaves the subposet");
    };

    ContractionCertificate cert;
    // step 1: Q -> N_Q(P)
    ContractionStep s1;
    s1.direction = Direction::LE;
    s1.image_of.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        Subgroup NQ = intersect(N, C.members[elems[i]]);
        s1.image_of[i] = find_local(NQ.members);
    }
    // step 2: R -> R O_p(N_G(P)), defined on the subgroups of N_G(P)
    ContractionStep s2;
    s2.direction = Direction::GE;
    s2.image_of.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (!C.members[elems[i]].members.is_subset_of(N.members)) continue;
        Subgroup RO = product_subgroup(G, C.members[elems[i]], O);
        s2.image_of[i] = find_local(RO.members);
    }
    // step 3: constant at O_p(N_G(P))
    ContractionStep s3;
    s3.direction = Direction::LE;
    s3.image_of.assign(n, -1);
    int o_local = find_local(O.members);
    for (int i = 0; i < n; ++i) s3.image_of[i] = o_local;
    cert.steps = {std::move(s1), std::move(s2), std::move(s3)};
    cert.terminal = o_local;
    return cert;
}

ContractionCertificate frattini_zigzag(const Collection& C, int member_P,
                                       const std::vector<int>& elems, Poset* out_poset) {
    const GroupTable& G = *C.G;
    const Subgroup& P = C.members[member_P];
    Subgroup Phi = frattini(G, P, C.p);
    Poset sub = sub_poset(poset_of(C), elems);
    if (out_poset) *out_poset = sub;
    int n = int(elems.size());
    auto find_local = [&](const DynBitset& bits) {
        int global = C.index_of(bits);
        for (int i = 0; i < n; ++i)
            if (elems[i] == global) return i;
        throw std::runtime_error("zigzag image leaves the subposet");
    };
    ContractionCertificate cert;
    ContractionStep s1;
    s1.direction = Direction::GE;
    s1.image_of.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        Subgroup PQ = product_subgroup(G, Phi, C.members[elems[i]]);
        s1.image_of[i] = find_local(PQ.members);
    }
    ContractionStep s2;
    s2.direction = Direction::LE;
    s2.image_of.assign(n, -1);
    int phi_local = find_local(Phi.members);
    for (int i = 0; i < n; ++i) s2.image_of[i] = phi_local;
    cert.steps = {std::move(s1), std::move(s2)};
    cert.terminal = phi_local;
    return cert;
}

}  // namespace sclab
