#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sclab/group.hpp"

namespace sclab {

enum class Kind { S, B, Ce, BCe, D, I, A, Z, E, Custom };

Kind kind_from_string(const std::string& s);
std::string kind_to_string(Kind k);

// A conjugation-closed family of nontrivial p-subgroups with its inclusion
// order and G-action. Immutable once built.
struct Collection {
    const GroupTable* G = nullptr;
    int p = 0;
    Kind kind = Kind::Custom;
    std::vector<Subgroup> members;            // sorted by (order, lex)
    std::vector<Subgroup> normalizers;        // cached N_G(member)
    std::vector<Subgroup> centralizers;       // cached C_G(member)
    std::vector<DynBitset> leq;               // leq[i].test(j) <=> members[i] <= members[j]
    std::vector<std::vector<int>> gen_action; // per G-generator: member index permutation
    std::vector<int> class_of;                // member -> conjugacy class id
    std::vector<int> class_reps;              // member index of the lex-min orbit rep

    bool empty() const { return members.empty(); }
    int size() const { return int(members.size()); }
    int index_of(const DynBitset& bits) const;  // -1 if absent
    int conj_member(int g, int i) const;        // index of g members[i] g^{-1}
    bool member_leq(int i, int j) const { return leq[i].test(j); }
};

// All nontrivial p-subgroups, enumerated inside the Sylow p-subgroups and
// closed under conjugation (never through subgroups_all of G).
std::vector<Subgroup> p_subgroup_pool(const GroupTable& G, int p);

Collection collect(const GroupTable& G, int p, Kind kind);
Collection make_custom_collection(const GroupTable& G, int p, std::vector<Subgroup> members);

struct MembershipFlags {
    bool radical = false;
    bool centric = false;
    bool principal_radical = false;
};
MembershipFlags membership_tests(const GroupTable& G, int p, const Subgroup& Q);

enum class Direction { GE, LE };

struct MonotoneEndomorphism {
    const Collection* domain = nullptr;
    std::vector<int> image_of;     // member index -> member index
    Direction direction = Direction::GE;
    bool centralizer_growth = false;
};

// F(P) = intersection of the Sylow subgroups containing P; F >= Id.
MonotoneEndomorphism endo_sylow_intersection(const Collection& C);
// F(V) = Omega_1 O_p Z(C_G(V)) on elementary abelian members; F >= Id.
MonotoneEndomorphism endo_Z(const Collection& C);
MonotoneEndomorphism iterate_to_fixpoint(const MonotoneEndomorphism& F);
MonotoneEndomorphism identity_endo(const Collection& C);

struct EndoCheckReport {
    bool pass = false;
    std::string violation;                  // first violated condition with witness
    bool conclusion_orbit_row = false;      // subgroup-row equivalence applies
    bool conclusion_conjugacy_row = false;  // centralizer-row equivalence applies
    bool conclusion_poset_row = false;      // normalizer-row equivalence applies
    std::vector<int> image_members;         // domain indices in the image
};
EndoCheckReport check_endomorphism(const Collection& C, const MonotoneEndomorphism& F);

enum class ClosureMode { Overgroups, Subgroups };

struct ClosureReport {
    bool closed = true;
    int witness_member = -1;       // member index
    std::optional<Subgroup> witness_subgroup;
};
ClosureReport closure_check(const Collection& C, ClosureMode mode);

}  // namespace sclab
