#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sclab/bitset.hpp"

namespace sclab {

// A finite group as a dense Cayley table. Element 0 is the identity.
// Immutable after construction; safe to share across threads.
struct GroupTable {
    int n = 0;
    std::vector<uint16_t> mul_;
    std::vector<uint16_t> inv_;
    std::vector<int> gens;                         // generating element indices
    std::vector<int> action_gens;                  // canonical generator list for semidirect action tables
    std::vector<std::string> generator_labels;     // parallel to action_gens
    std::string name;

    int mul(int a, int b) const { return mul_[size_t(a) * n + b]; }
    int inv(int a) const { return inv_[a]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^{-1}
    int pow(int a, long long e) const;
    int element_order(int a) const;

    // Identity/inverse axioms on all elements; associativity on all triples
    // up to order 512, random sample above.
    void validate() const;

    static GroupTable from_permutations(const std::vector<std::vector<int>>& perm_gens,
                                        int degree, const std::string& name);
};

struct Subgroup {
    DynBitset members;
    int order = 0;

    Subgroup() = default;
    explicit Subgroup(DynBitset b) : members(std::move(b)), order(members.count()) {}
    bool operator==(const Subgroup& o) const { return members == o.members; }
    bool contains(int x) const { return members.test(x); }
    std::vector<int> elements() const { return members.bits(); }
};

Subgroup trivial_subgroup(const GroupTable& G);
Subgroup full_subgroup(const GroupTable& G);

// Subgroup generated by the seed elements.
Subgroup closure(const GroupTable& G, const std::vector<int>& seed);
bool is_subgroup(const GroupTable& G, const DynBitset& S);

Subgroup conjugate_subgroup(const GroupTable& G, const Subgroup& S, int g);
Subgroup centralizer(const GroupTable& G, const Subgroup& S);
Subgroup normalizer(const GroupTable& G, const Subgroup& S);
Subgroup center_of(const GroupTable& G, const Subgroup& S);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
// Product set AB; the caller is responsible for AB being a group
// (e.g. one factor normalizes the other). Checked.
Subgroup product_subgroup(const GroupTable& G, const Subgroup& A, const Subgroup& B);
Subgroup derived_subgroup(const GroupTable& G, const Subgroup& S);

bool is_abelian(const GroupTable& G, const Subgroup& S);
bool is_elementary_abelian(const GroupTable& G, const Subgroup& S, int p);
bool is_normal_in(const GroupTable& G, const Subgroup& N, const Subgroup& H);
bool commute_elementwise(const GroupTable& G, const Subgroup& A, const Subgroup& B);

int p_part(int n, int p);
bool is_prime(int p);
bool is_p_group_order(int order, int p);

// One Sylow p-subgroup of H <= G (trivial if p does not divide |H|), and
// the full conjugation orbit under G.
Subgroup sylow_in(const GroupTable& G, const Subgroup& H, int p);
Subgroup sylow_p(const GroupTable& G, int p);
std::vector<Subgroup> all_sylows(const GroupTable& G, int p);
std::vector<Subgroup> sylows_of_subgroup(const GroupTable& G, const Subgroup& H, int p);

// Largest normal p-subgroup of H: the intersection of the Sylow p-subgroups.
Subgroup o_p(const GroupTable& G, const Subgroup& H, int p);
// Elements of order dividing p in an abelian p-group (error otherwise).
Subgroup omega1(const GroupTable& G, const Subgroup& A, int p);
// Frattini subgroup P' P^p of a p-group (error otherwise).
Subgroup frattini(const GroupTable& G, const Subgroup& P, int p);

struct QuotientResult {
    GroupTable table;
    std::vector<int> proj;  // element of G -> coset index
};
QuotientResult quotient(const GroupTable& G, const Subgroup& N);

// Standalone table for a subgroup with maps between ambient and local
// element indices.
struct LocalGroup {
    GroupTable table;
    std::vector<int> to_ambient;   // local index -> ambient element
    std::vector<int> to_local;     // ambient element -> local index or -1
};
LocalGroup subgroup_table(const GroupTable& G, const Subgroup& S);

std::vector<int> small_generating_set(const GroupTable& G, const Subgroup& S);

}  // namespace sclab
