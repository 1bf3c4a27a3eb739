#include "sclab/subgroups.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace sclab {

void sort_canonical(std::vector<Subgroup>& subs) {
    std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.members.lex_less(b.members);
    });
}

namespace {

// <H, g> for g normalizing H: the union of cosets H g^i.
Subgroup extend_by_normalizing(const GroupTable& G, const Subgroup& H, int g) {
    DynBitset b = H.members;
    auto hel = H.members.bits();
    int x = g;
    while (!b.test(x)) {
        for (int h : hel) b.set(G.mul(h, x));
        x = G.mul(x, g);
    }
    return Subgroup(b);
}

}  // namespace

std::vector<Subgroup> subgroups_all(const GroupTable& G, int order_cap) {
    if (G.n > order_cap) throw std::runtime_error("subgroups_all: order cap exceeded");

    std::unordered_set<DynBitset, DynBitsetHash> seen;
    std::vector<Subgroup> list;
    std::vector<int> work;  // indices not yet processed by the extension step

    auto add = [&](const Subgroup& S) {
        if (seen.insert(S.members).second) {
            list.push_back(S);
            work.push_back(int(list.size()) - 1);
            return true;
        }
        return false;
    };

    add(trivial_subgroup(G));
    for (int x = 1; x < G.n; ++x) add(closure(G, {x}));

    bool outer_changed = true;
    while (outer_changed) {
        outer_changed = false;
        // cyclic-extension pass
        while (!work.empty()) {
            int idx = work.back();
            work.pop_back();
            Subgroup H = list[idx];
            if (H.order == G.n) continue;
            Subgroup N = normalizer(G, H);
            auto nel = N.members.bits();
            for (int g : nel) {
                if (H.members.test(g)) continue;
                add(extend_by_normalizing(G, H, g));
            }
        }
        // completion pass: whole group, derived series, conjugates
        std::vector<Subgroup> extra;
        extra.push_back(full_subgroup(G));
        size_t m = list.size();
        for (size_t i = 0; i < m; ++i) {
            Subgroup D = derived_subgroup(G, list[i]);
            while (true) {
                extra.push_back(D);
                Subgroup D2 = derived_subgroup(G, D);
                if (D2.members == D.members) break;
                D = D2;
            }
        }
        for (const auto& S : extra) {
            if (add(S)) outer_changed = true;
            for (int g : G.gens) {
                Subgroup c = conjugate_subgroup(G, S, g);
                if (add(c)) outer_changed = true;
            }
        }
        // conjugation closure of everything found so far
        bool grew = true;
        while (grew) {
            grew = false;
            size_t cur = list.size();
            for (size_t i = 0; i < cur; ++i)
                for (int g : G.gens) {
                    Subgroup c = conjugate_subgroup(G, list[i], g);
                    if (add(c)) {
                        grew = true;
                        outer_changed = true;
                    }
                }
        }
    }

    sort_canonical(list);
    return list;
}

SubgroupClasses conjugacy_classes(const GroupTable& G, const std::vector<Subgroup>& subs) {
    std::unordered_map<DynBitset, int, DynBitsetHash> lookup;
    for (size_t i = 0; i < subs.size(); ++i) lookup[subs[i].members] = int(i);

    SubgroupClasses out;
    out.class_of.assign(subs.size(), -1);
    std::vector<int> gens = G.gens;
    if (gens.empty())
        for (int g = 1; g < G.n; ++g) gens.push_back(g);

    for (size_t i = 0; i < subs.size(); ++i) {
        if (out.class_of[i] >= 0) continue;
        int cls = int(out.reps.size());
        std::vector<int> orbit = {int(i)};
        out.class_of[i] = cls;
        size_t head = 0;
        while (head < orbit.size()) {
            int cur = orbit[head++];
            for (int g : gens) {
                Subgroup c = conjugate_subgroup(G, subs[cur], g);
                auto it = lookup.find(c.members);
                if (it == lookup.end())
                    throw std::runtime_error("conjugacy_classes: input not conjugation-closed");
                if (out.class_of[it->second] < 0) {
                    out.class_of[it->second] = cls;
                    orbit.push_back(it->second);
                }
            }
        }
        int best = orbit[0];
        for (int j : orbit)
            if (subs[j].members.lex_less(subs[best].members)) best = j;
        out.reps.push_back(subs[best]);
        std::sort(orbit.begin(), orbit.end());
        out.orbits.push_back(std::move(orbit));
    }
    return out;
}

}  // namespace sclab
