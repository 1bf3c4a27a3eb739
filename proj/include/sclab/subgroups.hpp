#pragma once

#include <vector>

#include "sclab/group.hpp"

namespace sclab {

// Every subgroup of G, each exactly once, sorted by (order, member list).
// Cyclic-extension enumeration (adjoin normalizing elements, building up
// from cyclic subgroups) reaches the solvable subgroups; the perfect ones
// are picked up from derived series of what is already found, so the
// non-solvable groups in range (A5, S5, SL(3,2)) come out complete.
std::vector<Subgroup> subgroups_all(const GroupTable& G, int order_cap = 2000);

struct SubgroupClasses {
    std::vector<Subgroup> reps;            // lex-min bitmap per class, sorted
    std::vector<std::vector<int>> orbits;  // indices into the input list
    std::vector<int> class_of;             // input index -> class id
};
SubgroupClasses conjugacy_classes(const GroupTable& G, const std::vector<Subgroup>& subs);

void sort_canonical(std::vector<Subgroup>& subs);

}  // namespace sclab
