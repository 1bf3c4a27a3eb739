#include "sclab/group.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <stdexcept>

namespace sclab {

int GroupTable::pow(int a, long long e) const {
    if (e < 0) return pow(inv(a), -e);
    int r = 0, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

int GroupTable::element_order(int a) const {
    int x = a, k = 1;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

void GroupTable::validate() const {
    if (n <= 0) throw std::runtime_error("group: empty table");
    for (int a = 0; a < n; ++a) {
        if (mul(0, a) != a || mul(a, 0) != a) throw std::runtime_error("group: identity axiom fails");
        if (mul(a, inv(a)) != 0 || mul(inv(a), a) != 0)
            throw std::runtime_error("group: inverse axiom fails");
    }
    if (n <= 512) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw std::runtime_error("group: associativity fails");
    } else {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> d(0, n - 1);
        for (int t = 0; t < 200000; ++t) {
            int a = d(rng), b = d(rng), c = d(rng);
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                throw std::runtime_error("group: associativity fails (sampled)");
        }
    }
}

GroupTable GroupTable::from_permutations(const std::vector<std::vector<int>>& perm_gens,
                                         int degree, const std::string& name) {
    std::vector<int> ident(degree);
    for (int i = 0; i < degree; ++i) ident[i] = i;
    for (const auto& g : perm_gens) {
        if (int(g.size()) != degree) throw std::runtime_error("perm generator degree mismatch");
        std::vector<char> seen(degree, 0);
        for (int v : g) {
            if (v < 0 || v >= degree || seen[v]) throw std::runtime_error("not a permutation");
            seen[v] = 1;
        }
    }
    auto compose = [degree](const std::vector<int>& f, const std::vector<int>& g) {
        // (f*g)(x) = f(g(x))
        std::vector<int> h(degree);
        for (int x = 0; x < degree; ++x) h[x] = f[g[x]];
        return h;
    };

    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> elems;
    std::queue<int> todo;
    index[ident] = 0;
    elems.push_back(ident);
    todo.push(0);
    while (!todo.empty()) {
        int i = todo.front();
        todo.pop();
        for (const auto& g : perm_gens) {
            auto prod = compose(elems[i], g);
            if (!index.count(prod)) {
                int id = int(elems.size());
                index[prod] = id;
                elems.push_back(prod);
                todo.push(id);
            }
        }
    }
    int n = int(elems.size());
    if (n > 65535) throw std::runtime_error("group too large for table representation");
    GroupTable G;
    G.n = n;
    G.name = name;
    G.mul_.assign(size_t(n) * n, 0);
    G.inv_.assign(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) G.mul_[size_t(a) * n + b] = uint16_t(index.at(compose(elems[a], elems[b])));
    for (int a = 0; a < n; ++a) {
        std::vector<int> iv(degree);
        for (int x = 0; x < degree; ++x) iv[elems[a][x]] = x;
        G.inv_[a] = uint16_t(index.at(iv));
    }
    for (const auto& g : perm_gens) G.gens.push_back(index.at(g));
    G.action_gens = G.gens;
    return G;
}

Subgroup trivial_subgroup(const GroupTable& G) {
    DynBitset b(G.n);
    b.set(0);
    return Subgroup(b);
}

Subgroup full_subgroup(const GroupTable& G) {
    DynBitset b(G.n);
    for (int i = 0; i < G.n; ++i) b.set(i);
    return Subgroup(b);
}

Subgroup closure(const GroupTable& G, const std::vector<int>& seed) {
    DynBitset b(G.n);
    b.set(0);
    std::vector<int> frontier = {0};
    for (int s : seed)
        if (!b.test(s)) {
            b.set(s);
            frontier.push_back(s);
        }
    size_t head = 0;
    while (head < frontier.size()) {
        int x = frontier[head++];
        for (int s : seed) {
            int y = G.mul(x, s);
            if (!b.test(y)) {
                b.set(y);
                frontier.push_back(y);
            }
            y = G.mul(s, x);
            if (!b.test(y)) {
                b.set(y);
                frontier.push_back(y);
            }
        }
    }
    return Subgroup(b);
}

bool is_subgroup(const GroupTable& G, const DynBitset& S) {
    if (!S.test(0)) return false;
    auto el = S.bits();
    for (int a : el) {
        if (!S.test(G.inv(a))) return false;
        for (int b : el)
            if (!S.test(G.mul(a, b))) return false;
    }
    return true;
}

Subgroup conjugate_subgroup(const GroupTable& G, const Subgroup& S, int g) {
    DynBitset b(G.n);
    S.members.for_each([&](int x) { b.set(G.conj(g, x)); });
    return Subgroup(b);
}

Subgroup centralizer(const GroupTable& G, const Subgroup& S) {
    auto el = S.members.bits();
    DynBitset b(G.n);
    for (int g = 0; g < G.n; ++g) {
        bool ok = true;
        for (int x : el)
            if (G.mul(g, x) != G.mul(x, g)) { ok = false; break; }
        if (ok) b.set(g);
    }
    return Subgroup(b);
}

Subgroup normalizer(const GroupTable& G, const Subgroup& S) {
    DynBitset b(G.n);
    auto el = S.members.bits();
    for (int g = 0; g < G.n; ++g) {
        bool ok = true;
        for (int x : el)
            if (!S.members.test(G.conj(g, x))) { ok = false; break; }
        if (ok) b.set(g);
    }
    return Subgroup(b);
}

Subgroup center_of(const GroupTable& G, const Subgroup& S) {
    auto el = S.members.bits();
    DynBitset b(G.n);
    for (int g : el) {
        bool ok = true;
        for (int x : el)
            if (G.mul(g, x) != G.mul(x, g)) { ok = false; break; }
        if (ok) b.set(g);
    }
    return Subgroup(b);
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    return Subgroup(a.members & b.members);
}

Subgroup product_subgroup(const GroupTable& G, const Subgroup& A, const Subgroup& B) {
    DynBitset b(G.n);
    auto ae = A.members.bits();
    auto be = B.members.bits();
    for (int x : ae)
        for (int y : be) b.set(G.mul(x, y));
    if (!is_subgroup(G, b)) throw std::runtime_error("product set is not a subgroup");
    return Subgroup(b);
}

Subgroup derived_subgroup(const GroupTable& G, const Subgroup& S) {
    auto el = S.members.bits();
    std::vector<int> comms;
    for (int x : el)
        for (int y : el) comms.push_back(G.mul(G.mul(x, y), G.mul(G.inv(x), G.inv(y))));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return closure(G, comms);
}

bool is_abelian(const GroupTable& G, const Subgroup& S) {
    auto el = S.members.bits();
    for (size_t i = 0; i < el.size(); ++i)
        for (size_t j = i + 1; j < el.size(); ++j)
            if (G.mul(el[i], el[j]) != G.mul(el[j], el[i])) return false;
    return true;
}

bool is_elementary_abelian(const GroupTable& G, const Subgroup& S, int p) {
    if (!is_p_group_order(S.order, p)) return false;
    if (!is_abelian(G, S)) return false;
    bool ok = true;
    S.members.for_each([&](int x) {
        if (G.pow(x, p) != 0) ok = false;
    });
    return ok;
}

bool is_normal_in(const GroupTable& G, const Subgroup& N, const Subgroup& H) {
    bool ok = true;
    H.members.for_each([&](int g) {
        if (!ok) return;
        N.members.for_each([&](int x) {
            if (!N.members.test(G.conj(g, x))) ok = false;
        });
    });
    return ok;
}

bool commute_elementwise(const GroupTable& G, const Subgroup& A, const Subgroup& B) {
    auto ae = A.members.bits();
    auto be = B.members.bits();
    for (int x : ae)
        for (int y : be)
            if (G.mul(x, y) != G.mul(y, x)) return false;
    return true;
}

int p_part(int n, int p) {
    int q = 1;
    while (n % p == 0) {
        n /= p;
        q *= p;
    }
    return q;
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool is_p_group_order(int order, int p) {
    if (order < 1) return false;
    while (order % p == 0) order /= p;
    return order == 1;
}

Subgroup sylow_in(const GroupTable& G, const Subgroup& H, int p) {
    if (!is_prime(p)) throw std::runtime_error("sylow: p not prime");
    int target = p_part(H.order, p);
    if (target == 1) return trivial_subgroup(G);

    auto el = H.members.bits();
    // seed with any p-element
    int seed = -1;
    for (int x : el)
        if (x != 0 && is_p_group_order(G.element_order(x), p)) { seed = x; break; }
    Subgroup P = closure(G, {seed});
    while (P.order < target) {
        Subgroup N = intersect(normalizer(G, P), H);
        bool grown = false;
        auto ne = N.members.bits();
        for (int y : ne) {
            if (P.members.test(y)) continue;
            int m = G.element_order(y);
            int mp = m / p_part(m, p);
            int z = G.pow(y, mp);  // p-part of y
            if (z != 0 && !P.members.test(z)) {
                auto gens = P.members.bits();
                gens.push_back(z);
                P = closure(G, gens);
                grown = true;
                break;
            }
        }
        if (!grown) throw std::runtime_error("sylow: failed to grow (not a subgroup?)");
    }
    return P;
}

Subgroup sylow_p(const GroupTable& G, int p) { return sylow_in(G, full_subgroup(G), p); }

static std::vector<Subgroup> conjugation_orbit(const GroupTable& G, const Subgroup& S) {
    std::vector<Subgroup> orbit;
    std::vector<DynBitset> seen;
    std::queue<Subgroup> todo;
    orbit.push_back(S);
    seen.push_back(S.members);
    todo.push(S);
    std::vector<int> gens = G.gens;
    if (gens.empty())
        for (int g = 1; g < G.n; ++g) gens.push_back(g);
    while (!todo.empty()) {
        Subgroup cur = todo.front();
        todo.pop();
        for (int g : gens) {
            Subgroup c = conjugate_subgroup(G, cur, g);
            bool found = false;
            for (const auto& b : seen)
                if (b == c.members) { found = true; break; }
            if (!found) {
                seen.push_back(c.members);
                orbit.push_back(c);
                todo.push(c);
            }
        }
    }
    std::sort(orbit.begin(), orbit.end(),
              [](const Subgroup& a, const Subgroup& b) { return a.members.lex_less(b.members); });
    return orbit;
}

std::vector<Subgroup> all_sylows(const GroupTable& G, int p) {
    if (!is_prime(p)) throw std::runtime_error("sylow: p not prime");
    Subgroup S = sylow_p(G, p);
    if (S.order == 1) return {};
    return conjugation_orbit(G, S);
}

std::vector<Subgroup> sylows_of_subgroup(const GroupTable& G, const Subgroup& H, int p) {
    Subgroup S = sylow_in(G, H, p);
    if (S.order == 1) return {};
    // orbit under H-conjugation
    std::vector<Subgroup> orbit;
    std::vector<DynBitset> seen;
    std::queue<Subgroup> todo;
    orbit.push_back(S);
    seen.push_back(S.members);
    todo.push(S);
    auto hel = H.members.bits();
    while (!todo.empty()) {
        Subgroup cur = todo.front();
        todo.pop();
        for (int g : hel) {
            Subgroup c = conjugate_subgroup(G, cur, g);
            bool found = false;
            for (const auto& b : seen)
                if (b == c.members) { found = true; break; }
            if (!found) {
                seen.push_back(c.members);
                orbit.push_back(c);
                todo.push(c);
            }
        }
    }
    return orbit;
}

Subgroup o_p(const GroupTable& G, const Subgroup& H, int p) {
    auto syl = sylows_of_subgroup(G, H, p);
    if (syl.empty()) return trivial_subgroup(G);
    DynBitset b = syl[0].members;
    for (size_t i = 1; i < syl.size(); ++i) b &= syl[i].members;
    return Subgroup(b);
}

Subgroup omega1(const GroupTable& G, const Subgroup& A, int p) {
    if (!is_p_group_order(A.order, p)) throw std::runtime_error("omega1: not a p-group");
    if (!is_abelian(G, A)) throw std::runtime_error("omega1: not abelian");
    DynBitset b(G.n);
    A.members.for_each([&](int x) {
        if (G.pow(x, p) == 0) b.set(x);
    });
    return Subgroup(b);
}

Subgroup frattini(const GroupTable& G, const Subgroup& P, int p) {
    if (!is_p_group_order(P.order, p)) throw std::runtime_error("frattini: not a p-group");
    auto el = P.members.bits();
    std::vector<int> gens;
    for (int x : el)
        for (int y : el) gens.push_back(G.mul(G.mul(x, y), G.mul(G.inv(x), G.inv(y))));
    for (int x : el) gens.push_back(G.pow(x, p));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return closure(G, gens);
}

QuotientResult quotient(const GroupTable& G, const Subgroup& N) {
    if (!is_normal_in(G, N, full_subgroup(G))) throw std::runtime_error("quotient: N not normal");
    std::vector<int> proj(G.n, -1);
    std::vector<int> reps;
    auto nel = N.members.bits();
    for (int g = 0; g < G.n; ++g) {
        if (proj[g] >= 0) continue;
        int id = int(reps.size());
        reps.push_back(g);
        for (int x : nel) proj[G.mul(g, x)] = id;
    }
    int m = int(reps.size());
    GroupTable Q;
    Q.n = m;
    Q.name = G.name + "/N";
    Q.mul_.assign(size_t(m) * m, 0);
    Q.inv_.assign(m, 0);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) Q.mul_[size_t(a) * m + b] = uint16_t(proj[G.mul(reps[a], reps[b])]);
        Q.inv_[a] = uint16_t(proj[G.inv(reps[a])]);
    }
    for (int g : G.gens) {
        int img = proj[g];
        if (img != 0) Q.gens.push_back(img);
    }
    if (Q.gens.empty() && m > 1)
        for (int a = 1; a < m; ++a) Q.gens.push_back(a);
    Q.action_gens = Q.gens;
    return {std::move(Q), std::move(proj)};
}

LocalGroup subgroup_table(const GroupTable& G, const Subgroup& S) {
    LocalGroup L;
    auto el = S.members.bits();
    // identity must map to local index 0
    std::vector<int> order_el;
    order_el.push_back(0);
    for (int x : el)
        if (x != 0) order_el.push_back(x);
    L.to_ambient = order_el;
    L.to_local.assign(G.n, -1);
    for (size_t i = 0; i < order_el.size(); ++i) L.to_local[order_el[i]] = int(i);
    int m = int(order_el.size());
    L.table.n = m;
    L.table.name = G.name + ":sub";
    L.table.mul_.assign(size_t(m) * m, 0);
    L.table.inv_.assign(m, 0);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b)
            L.table.mul_[size_t(a) * m + b] = uint16_t(L.to_local[G.mul(order_el[a], order_el[b])]);
        L.table.inv_[a] = uint16_t(L.to_local[G.inv(order_el[a])]);
    }
    L.table.gens = small_generating_set(L.table, full_subgroup(L.table));
    L.table.action_gens = L.table.gens;
    return L;
}

std::vector<int> small_generating_set(const GroupTable& G, const Subgroup& S) {
    std::vector<int> gens;
    Subgroup cur = trivial_subgroup(G);
    auto el = S.members.bits();
    while (cur.order < S.order) {
        int pick = -1;
        for (int x : el)
            if (!cur.members.test(x)) { pick = x; break; }
        gens.push_back(pick);
        cur = closure(G, gens);
    }
    return gens;
}

}  // namespace sclab
